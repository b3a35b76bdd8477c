#include "category.hpp"

#include "error.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace corner {

int OmegaCategory::compose(int a, int b, int p) const {
  if (t(a, p) != s(b, p)) return -1;
  if (p >= dim(a)) return b;
  if (p >= dim(b)) return a;
  auto it = comp_.find(key(a, b, p));
  return it == comp_.end() ? -1 : it->second;
}

std::vector<int> OmegaCategory::of_dim(int d) const {
  std::vector<int> r;
  for (int m = 0; m < size(); ++m)
    if (mor_[m].dim == d) r.push_back(m);
  return r;
}

int OmegaCategory::find_name(const std::string& n) const {
  auto it = by_name_.find(n);
  return it == by_name_.end() ? -1 : it->second;
}

const std::vector<int>& OmegaCategory::with_boundary(int p, int a, int b) const {
  static const std::vector<int> none;
  auto it = bnd_.find(bkey(p, a, b));
  return it == bnd_.end() ? none : it->second;
}

const std::vector<int>& OmegaCategory::with_source(int p, int a) const {
  static const std::vector<int> none;
  auto it = src_idx_.find(bkey(p, a, 0));
  return it == src_idx_.end() ? none : it->second;
}

int OmegaCategory::find_cells(const CellSet& c) const {
  auto it = by_cells_.find(c);
  return it == by_cells_.end() ? -1 : it->second;
}

std::vector<OmegaCategory::Entry> OmegaCategory::composition_entries() const {
  std::vector<Entry> r;
  for (const auto& [k, c] : comp_) {
    int a = static_cast<int>(k >> 34);
    int b = static_cast<int>((k >> 4) & ((uint64_t{1} << 30) - 1));
    int p = static_cast<int>(k & 15);
    r.push_back({a, b, p, c});
  }
  std::sort(r.begin(), r.end(), [](const Entry& x, const Entry& y) {
    return std::tie(x.a, x.b, x.p) < std::tie(y.a, y.b, y.p);
  });
  return r;
}

int OmegaCategory::add(Morph m, std::optional<CellSet> cells) {
  const int id = size();
  if (cells) {
    by_cells_.emplace(*cells, id);
    cells_.push_back(std::move(*cells));
  }
  if (!m.name.empty()) by_name_.emplace(m.name, id);
  mor_.push_back(std::move(m));
  return id;
}

void OmegaCategory::set_compose(int a, int b, int p, int c) { comp_[key(a, b, p)] = c; }

void OmegaCategory::finish() {
  objects_.clear();
  atoms_.clear();
  bnd_.clear();
  src_idx_.clear();
  max_dim_ = 0;
  for (int m = 0; m < size(); ++m) {
    max_dim_ = std::max(max_dim_, dim(m));
    if (dim(m) == 0) objects_.push_back(m);
    if (mor_[m].atom >= 0) atoms_.push_back(m);
  }
  const int top = std::max(max_dim_, Limits::hard_cap) + 2;
  for (int m = 0; m < size(); ++m)
    for (int p = std::max(1, dim(m)); p <= top; ++p) {
      bnd_[bkey(p, s(m, p - 1), t(m, p - 1))].push_back(m);
      src_idx_[bkey(p, s(m, p - 1), 0)].push_back(m);
    }
  non_contracting_ = true;
  for (int m = 0; m < size(); ++m)
    if (dim(m) >= 1 && (dim(s(m, 1)) != 1 || dim(t(m, 1)) != 1)) non_contracting_ = false;
  length_one_ = true;
  for (const auto& [k, c] : comp_) {
    int a = static_cast<int>(k >> 34);
    int b = static_cast<int>((k >> 4) & ((uint64_t{1} << 30) - 1));
    int p = static_cast<int>(k & 15);
    if (p == 0 && dim(a) >= 1 && dim(b) >= 1) length_one_ = false;
  }
}

int OmegaCategory::boundary_of(int m, int k, int side) const {
  if (m < 0 || m >= size()) fail(Errc::BadArgument, "unknown morphism " + ref(m));
  if (k < 0 || k > dim(m))
    fail(Errc::BadLevel, "level " + std::to_string(k) + " outside 0.." + std::to_string(dim(m)));
  return d(m, k, side);
}

std::string OmegaCategory::describe(int m) const {
  const Morph& x = mor_[m];
  if (x.left >= 0)
    return "(" + describe(x.left) + " *" + std::to_string(x.level) + " " + describe(x.right) + ")";
  return x.name.empty() ? ref(m) : x.name;
}

// ---------------------------------------------------------------- closure

OmegaCategory free_closure(std::shared_ptr<const Scheme> sch, const BuildOptions& opt) {
  OmegaCategory C;
  C.scheme_ = sch;
  const Scheme& S = *sch;
  int top = -1;
  for (int c = 0; c < S.size(); ++c) top = std::max(top, S.dim[c]);

  // partner indices: (p, s_p m) -> m with dim m > p, and (p, t_p m) -> m
  std::unordered_map<uint64_t, std::vector<int>> by_src, by_tgt;
  auto pk = [](int p, int m) { return (uint64_t(p) << 32) | uint64_t(uint32_t(m)); };

  auto check_budget = [&]() {
    if (static_cast<std::size_t>(C.size()) >= opt.budget)
      fail(Errc::ClosureBudgetExceeded,
           "closure exceeds the budget of " + std::to_string(opt.budget) + " morphisms");
  };

  auto lookup = [&](const CellSet& cs) {
    int id = C.find_cells(cs);
    if (id < 0) fail(Errc::Internal, "boundary molecule missing from table: " + S.print(cs));
    return id;
  };

  std::deque<int> queue;
  for (int D = 0; D <= top; ++D) {
    for (int c = 0; c < S.size(); ++c) {
      if (S.dim[c] != D) continue;
      check_budget();
      OmegaCategory::Morph m;
      m.dim = D;
      m.name = S.label[c];
      m.atom = c;
      if (D > 0) {
        int sd = lookup(S.atom_boundary(c, 0));
        int td = lookup(S.atom_boundary(c, 1));
        if (C.dim(sd) != D - 1 || C.dim(td) != D - 1)
          fail(Errc::Internal, "atom boundary has the wrong dimension at " + S.label[c]);
        for (int k = 0; k < D - 1; ++k) {
          m.src.push_back(C.s(sd, k));
          m.tgt.push_back(C.t(td, k));
        }
        m.src.push_back(sd);
        m.tgt.push_back(td);
      }
      int id = C.add(std::move(m), S.closure(c));
      queue.push_back(id);
    }
    std::vector<int> registered;
    while (!queue.empty()) {
      int m = queue.front();
      queue.pop_front();
      for (int p = 0; p < C.dim(m); ++p) {
        by_src[pk(p, C.s(m, p))].push_back(m);
        by_tgt[pk(p, C.t(m, p))].push_back(m);
      }
      auto try_pair = [&](int a, int b, int p) {
        if (C.comp_.count(OmegaCategory::key(a, b, p))) return;
        const CellSet& A = C.cells(a);
        const CellSet& B = C.cells(b);
        if (!((A & B) == C.cells(C.t(a, p)))) return;  // adopted side condition
        CellSet U = A | B;
        const int dm = std::max(C.dim(a), C.dim(b));
        OmegaCategory::Morph r;
        r.dim = dm;
        r.left = a;
        r.right = b;
        r.level = p;
        for (int k = 0; k < dm; ++k) {
          if (k < p) {
            r.src.push_back(C.s(a, k));
            r.tgt.push_back(C.t(a, k));
          } else if (k == p) {
            r.src.push_back(C.s(a, p));
            r.tgt.push_back(C.t(b, p));
          } else {
            r.src.push_back(lookup(C.cells(C.s(a, k)) | C.cells(C.s(b, k))));
            r.tgt.push_back(lookup(C.cells(C.t(a, k)) | C.cells(C.t(b, k))));
          }
        }
        int id = C.find_cells(U);
        if (id >= 0) {
          const auto& old = C.morph(id);
          if (old.dim != r.dim || old.src != r.src || old.tgt != r.tgt)
            fail(Errc::Internal, "inconsistent boundary tables for " + S.print(U));
        } else {
          check_budget();
          id = C.add(std::move(r), U);
          queue.push_back(id);
        }
        C.set_compose(a, b, p, id);
      };
      for (int p = 0; p < C.dim(m); ++p) {
        // m on the left
        auto it = by_src.find(pk(p, C.t(m, p)));
        if (it != by_src.end()) {
          std::vector<int> partners = it->second;
          for (int b : partners) try_pair(m, b, p);
        }
        auto jt = by_tgt.find(pk(p, C.s(m, p)));
        if (jt != by_tgt.end()) {
          std::vector<int> partners = jt->second;
          for (int a : partners) try_pair(a, m, p);
        }
      }
    }
  }
  C.finish();
  return C;
}

OmegaCategory build_In(int n, const BuildOptions& opt) {
  if (n > Limits::hard_cap + 1) fail(Errc::DimensionCap, "I^n requested beyond the cap");
  return free_closure(scheme_from_precubical(standard_cube(n)), opt);
}

OmegaCategory build_oriental(int n, const BuildOptions& opt) {
  if (n > Limits::hard_cap + 1) fail(Errc::DimensionCap, "oriental requested beyond the cap");
  return free_closure(oriental_scheme(n), opt);
}

OmegaCategory build_free_category(const PrecubicalSet& k, const BuildOptions& opt) {
  if (!validate(k).ok) fail(Errc::InvalidInput, "precubical set fails validation");
  return free_closure(scheme_from_precubical(k), opt);
}

OmegaCategory build_presented(const std::string& kind, int p) {
  if (p < 1) fail(Errc::BadArgument, "presented categories need p >= 1");
  if (p > Limits::hard_cap) fail(Errc::DimensionCap, "p exceeds the dimension cap");
  if (kind == "2_p") return free_closure(globe_scheme(p, false));
  if (kind == "G_p") return free_closure(globe_scheme(p, true));
  fail(Errc::BadArgument, "unknown presented category '" + kind + "'");
}

OmegaCategory path_shift(const OmegaCategory& c) {
  if (!c.non_contracting()) fail(Errc::NotNonContracting, "path shift needs a non-contracting category");
  if (!c.length_at_most_one()) fail(Errc::NotLengthAtMostOne, "path shift needs length at most one");
  OmegaCategory P;
  std::vector<int> map(c.size(), -1);
  int next = 0;
  for (int m = 0; m < c.size(); ++m)
    if (c.dim(m) >= 1) map[m] = next++;
  for (int m = 0; m < c.size(); ++m) {
    if (map[m] < 0) continue;
    OmegaCategory::Morph r;
    r.dim = c.dim(m) - 1;
    r.name = c.morph(m).name;
    r.atom = c.morph(m).atom;
    for (int k = 0; k < r.dim; ++k) {
      r.src.push_back(map[c.s(m, k + 1)]);
      r.tgt.push_back(map[c.t(m, k + 1)]);
    }
    const auto& o = c.morph(m);
    if (o.left >= 0 && o.level >= 1) {
      r.left = map[o.left];
      r.right = map[o.right];
      r.level = o.level - 1;
    }
    P.add(std::move(r));
  }
  for (const auto& e : c.composition_entries()) {
    if (e.p < 1) continue;
    P.set_compose(map[e.a], map[e.b], e.p - 1, map[e.c]);
  }
  P.finish();
  return P;
}

OmegaCategory bilocalize(const OmegaCategory& c, const std::vector<int>& initial,
                         const std::vector<int>& final_states) {
  std::set<int> I(initial.begin(), initial.end()), F(final_states.begin(), final_states.end());
  for (int x : I)
    if (x < 0 || x >= c.size() || c.dim(x) != 0) fail(Errc::UnknownState, "initial state unknown");
  for (int x : F)
    if (x < 0 || x >= c.size() || c.dim(x) != 0) fail(Errc::UnknownState, "final state unknown");
  OmegaCategory B;
  std::vector<int> map(c.size(), -1);
  std::vector<int> kept;
  for (int m = 0; m < c.size(); ++m) {
    bool keep = c.dim(m) == 0 ? (I.count(m) || F.count(m))
                              : (I.count(c.s(m, 0)) && F.count(c.t(m, 0)));
    if (!keep) continue;
    map[m] = static_cast<int>(kept.size());
    kept.push_back(m);
  }
  for (int m : kept) {
    OmegaCategory::Morph r = c.morph(m);
    for (auto& x : r.src) x = map[x];
    for (auto& x : r.tgt) x = map[x];
    if (r.left >= 0) {
      r.left = map[r.left];
      r.right = map[r.right];
      if (r.left < 0 || r.right < 0) r.left = r.right = r.level = -1;
    }
    if (c.has_cells())
      B.add(std::move(r), c.cells(m));
    else
      B.add(std::move(r));
  }
  for (const auto& e : c.composition_entries())
    if (map[e.a] >= 0 && map[e.b] >= 0 && map[e.c] >= 0)
      B.set_compose(map[e.a], map[e.b], e.p, map[e.c]);
  B.scheme_ = c.scheme();
  B.finish();
  return B;
}

OmegaCategory build_thin_counterexample() {
  OmegaCategory C;
  auto obj = [&](const std::string& n) {
    OmegaCategory::Morph m;
    m.name = n;
    m.atom = 0;
    return C.add(std::move(m));
  };
  int lo = obj("--"), mid = obj("-+|+-"), hi = obj("++");
  auto arrow = [&](const std::string& n, int a, int b, bool atom) {
    OmegaCategory::Morph m;
    m.dim = 1;
    m.name = n;
    m.src = {a};
    m.tgt = {b};
    if (atom) m.atom = 0;
    return C.add(std::move(m));
  };
  int e = arrow("-0|0-", lo, mid, true);
  int f = arrow("0+", mid, hi, true);
  int g = arrow("+0", mid, hi, true);
  int h = arrow("(-0*0 0+)|(0-*0 +0)|00", lo, hi, false);
  C.set_compose(e, f, 0, h);
  C.set_compose(e, g, 0, h);
  C.finish();
  return C;
}

std::vector<std::string> check_globular_axioms(const OmegaCategory& c, std::size_t triple_cap) {
  std::vector<std::string> bad;
  auto note = [&](const std::string& s) {
    if (bad.size() < 50) bad.push_back(s);
  };
  const int N = c.size();
  // globularity: s_j s_k = s_j t_k = s_j for j < k
  for (int m = 0; m < N; ++m)
    for (int k = 0; k < c.dim(m); ++k)
      for (int j = 0; j < k; ++j) {
        if (c.s(c.s(m, k), j) != c.s(m, j) || c.s(c.t(m, k), j) != c.s(m, j) ||
            c.t(c.s(m, k), j) != c.t(m, j) || c.t(c.t(m, k), j) != c.t(m, j))
          note("globularity at " + OmegaCategory::ref(m));
        if (c.dim(c.s(m, k)) > k || c.dim(c.t(m, k)) > k) note("boundary dimension at " + OmegaCategory::ref(m));
      }
  // composition boundaries and units
  auto entries = c.composition_entries();
  for (const auto& e : entries) {
    for (int k = 0; k < c.dim(e.c); ++k) {
      int sk, tk;
      if (k < e.p) {
        sk = c.s(e.a, k);
        tk = c.t(e.a, k);
      } else if (k == e.p) {
        sk = c.s(e.a, k);
        tk = c.t(e.b, k);
      } else {
        sk = c.compose(c.s(e.a, k), c.s(e.b, k), e.p);
        tk = c.compose(c.t(e.a, k), c.t(e.b, k), e.p);
      }
      if (c.s(e.c, k) != sk || c.t(e.c, k) != tk)
        note("boundary of composite " + OmegaCategory::ref(e.c) + " at level " + std::to_string(k));
    }
  }
  for (int m = 0; m < N; ++m)
    for (int p = 0; p < c.dim(m); ++p)
      if (c.compose(c.s(m, p), m, p) != m || c.compose(m, c.t(m, p), p) != m)
        note("unit law at " + OmegaCategory::ref(m));
  // associativity and interchange on a bounded number of triples/quadruples
  std::size_t checked = 0;
  for (const auto& e1 : entries) {
    for (const auto& e2 : entries) {
      if (checked >= triple_cap) break;
      // (x *p y) *p z = x *p (y *p z) with e1 = x*y, e2 = y*z
      if (e1.b == e2.a && e1.p == e2.p) {
        ++checked;
        int lhs = c.compose(e1.c, e2.b, e1.p);
        int rhs = c.compose(e1.a, e2.c, e1.p);
        if (lhs != rhs) note("associativity at level " + std::to_string(e1.p));
      }
    }
  }
  checked = 0;
  // interchange (x *n y) *m (z *n w) = (x *m z) *n (y *m w), m < n
  for (const auto& top : entries) {
    const int m = top.p;
    const auto& L = c.morph(top.a);
    const auto& R = c.morph(top.b);
    if (L.left < 0 || R.left < 0 || L.level != R.level || L.level <= m) continue;
    if (checked++ >= triple_cap) break;
    const int n = L.level;
    int xz = c.compose(L.left, R.left, m), yw = c.compose(L.right, R.right, m);
    if (xz < 0 || yw < 0) continue;
    if (c.compose(xz, yw, n) != top.c) note("interchange at levels " + std::to_string(m) + "," + std::to_string(n));
  }
  return bad;
}

}  // namespace corner
