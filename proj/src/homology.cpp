#include "homology.hpp"

#include "error.hpp"
#include "folding.hpp"
#include "scheme.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace corner {

const char* theory_name(Theory t) {
  switch (t) {
    case Theory::Branching: return "branching";
    case Theory::Merging: return "merging";
    case Theory::ReducedBranching: return "reduced-branching";
    case Theory::Formal: return "formal";
    case Theory::GoubaultMinus: return "goubault-minus";
    case Theory::GoubaultPlus: return "goubault-plus";
  }
  return "?";
}

Theory parse_theory(const std::string& s) {
  for (Theory t : {Theory::Branching, Theory::Merging, Theory::ReducedBranching, Theory::Formal,
                   Theory::GoubaultMinus, Theory::GoubaultPlus})
    if (s == theory_name(t)) return t;
  fail(Errc::BadArgument, "unknown theory '" + s + "'");
}

// ---------------------------------------------------------------- nerve

CornerNerve::CornerNerve(const OmegaCategory& c, int side, int top, bool thin_top, std::size_t budget)
    : c_(&c), side_(side) {
  if (top < 0) fail(Errc::BadArgument, "negative degree");
  if (!c.non_contracting()) fail(Errc::NotNonContracting, "corner homology needs a non-contracting category");
  cubes_.resize(top + 1);
  index_.resize(top + 1);
  for (int n = 0; n <= top; ++n) {
    EnumerateOptions opt;
    opt.filter = side == 0 ? Filter::Branching : Filter::Merging;
    opt.budget = budget;
    opt.thin_only = thin_top && n == top;
    cubes_[n] = enumerate_cubes(c, n, opt);
    for (int i = 0; i < static_cast<int>(cubes_[n].size()); ++i) index_[n].emplace(cubes_[n][i], i);
  }
}

int CornerNerve::find(const SingularCube& x) const {
  if (x.n < 0 || x.n > top()) return -1;
  auto it = index_[x.n].find(x);
  return it == index_[x.n].end() ? -1 : it->second;
}

std::string CornerNerve::label(const SingularCube& x) const {
  std::string s = "[";
  for (std::size_t w = 0; w < x.img.size(); ++w) s += (w ? "," : "") + std::to_string(x.img[w]);
  return s + "]";
}

SVec CornerNerve::boundary(const SingularCube& x) const {
  SVec v;
  for (int i = 1; i <= x.n; ++i) {
    int k = find(face(x, i, side_));
    if (k < 0) fail(Errc::Internal, "face of a corner cube left the nerve");
    v.add(k, (i % 2 == 1) ? 1 : -1);
  }
  v.normalize();
  return v;
}

// ---------------------------------------------------------------- complexes

ChainComplex corner_complex(const CornerNerve& nv, int up_to) {
  if (nv.top() < up_to + 1) fail(Errc::DimensionCap, "nerve too shallow for the requested degree");
  ChainComplex cx;
  cx.basis.resize(up_to + 2);
  cx.d.resize(up_to + 2);
  for (int n = 0; n <= up_to + 1; ++n) {
    for (const auto& x : nv.cubes(n)) cx.basis[n].push_back(nv.label(x));
    if (n == 0) continue;
    SparseMatrix m(static_cast<int>(nv.cubes(n - 1).size()), static_cast<int>(nv.cubes(n).size()));
    for (int j = 0; j < m.cols; ++j) m.col[j] = nv.boundary(nv.cubes(n)[j]);
    cx.d[n] = std::move(m);
  }
  return cx;
}

ChainComplex corner_complex(const OmegaCategory& c, int side, int up_to) {
  return corner_complex(CornerNerve(c, side, up_to + 1), up_to);
}

QuotientComplex reduced_corner_complex(const CornerNerve& nv, int up_to) {
  if (nv.side() != 0) fail(Errc::BadArgument, "the reduced complex is built on the branching nerve");
  QuotientComplex q;
  q.cx = corner_complex(nv, up_to);
  const OmegaCategory& c = nv.category();
  q.relators.resize(up_to + 2);
  for (int n = 0; n <= up_to + 1; ++n) {
    const auto& cubes = nv.cubes(n);
    for (int i = 0; i < static_cast<int>(cubes.size()); ++i)
      if (is_thin(c, cubes[i])) {
        SVec v;
        v.add(i, 1);
        q.relators[n].push_back(std::move(v));
      }
    if (n + 1 <= nv.top())
      for (const auto& y : nv.cubes(n + 1))
        if (is_thin(c, y)) {
          SVec v = nv.boundary(y);
          if (!v.empty()) q.relators[n].push_back(std::move(v));
        }
  }
  return q;
}

QuotientComplex reduced_corner_complex(const OmegaCategory& c, int up_to) {
  return reduced_corner_complex(CornerNerve(c, 0, up_to + 1), up_to);
}

QuotientComplex formal_complex(const OmegaCategory& c, int up_to) {
  QuotientComplex q;
  const int top = up_to + 1;
  q.cx.basis.resize(top + 1);
  q.cx.d.resize(top + 1);
  q.relators.resize(top + 1);
  std::vector<int> pos(c.size(), -1);
  std::vector<std::vector<int>> gens(top + 1);
  for (int n = 0; n <= top; ++n) {
    gens[n] = c.of_dim(n);
    for (int i = 0; i < static_cast<int>(gens[n].size()); ++i) {
      pos[gens[n][i]] = i;
      q.cx.basis[n].push_back(c.name(gens[n][i]));
    }
  }
  // [m] in degree n: zero when m is lower dimensional
  auto term = [&](SVec& v, int m, int n, int sign) {
    if (c.dim(m) == n) v.add(pos[m], sign);
  };
  for (int n = 1; n <= top; ++n) {
    SparseMatrix m(static_cast<int>(gens[n - 1].size()), static_cast<int>(gens[n].size()));
    for (int j = 0; j < m.cols; ++j) {
      const int x = gens[n][j];
      SVec v;
      term(v, c.s(x, n - 1), n - 1, 1);
      if (n >= 2) term(v, c.t(x, n - 1), n - 1, -1);
      v.normalize();
      m.col[j] = std::move(v);
    }
    q.cx.d[n] = std::move(m);
  }
  for (const auto& e : c.composition_entries()) {
    const int n = c.dim(e.c);
    if (n > top || n < 1) continue;
    SVec v;
    term(v, e.c, n, 1);
    term(v, e.a, n, -1);
    if (e.p >= 1) term(v, e.b, n, -1);
    v.normalize();
    if (!v.empty()) q.relators[n].push_back(std::move(v));
  }
  return q;
}

HomologySummary compute_homology(Theory t, const OmegaCategory* c, const PrecubicalSet* k, int up_to) {
  switch (t) {
    case Theory::GoubaultMinus:
    case Theory::GoubaultPlus: {
      if (!k) fail(Errc::BadArgument, "Goubault homology needs a precubical set");
      return complex_homology(goubault_complex(*k, t == Theory::GoubaultMinus ? 0 : 1), up_to);
    }
    default: break;
  }
  if (!c) fail(Errc::BadArgument, "missing category");
  switch (t) {
    case Theory::Branching: return complex_homology(corner_complex(*c, 0, up_to), up_to);
    case Theory::Merging: return complex_homology(corner_complex(*c, 1, up_to), up_to);
    case Theory::ReducedBranching: return complex_homology(reduced_corner_complex(*c, up_to), up_to);
    case Theory::Formal: return complex_homology(formal_complex(*c, up_to), up_to);
    default: break;
  }
  fail(Errc::Internal, "unhandled theory");
}

std::string homology_json(Theory t, const HomologySummary& h) {
  nlohmann::ordered_json groups = nlohmann::ordered_json::array();
  for (const auto& g : h.groups) {
    nlohmann::ordered_json tor = nlohmann::ordered_json::array();
    for (const Integer& x : g.torsion) {
      if (x <= Integer(INT64_MAX))
        tor.push_back(x.convert_to<int64_t>());
      else
        tor.push_back(x.str());
    }
    groups.push_back({{"degree", g.degree}, {"betti", g.betti}, {"torsion", tor}});
  }
  nlohmann::ordered_json j{{"theory", theory_name(t)}, {"groups", groups}};
  return j.dump();
}

std::string homology_table(Theory t, const HomologySummary& h) {
  std::ostringstream out;
  out << "theory " << theory_name(t) << "\n";
  out << "degree  betti  torsion  group\n";
  for (const auto& g : h.groups) {
    std::string tor;
    for (const Integer& x : g.torsion) tor += (tor.empty() ? "" : ",") + x.str();
    if (tor.empty()) tor = "-";
    out << g.degree << "  " << g.betti << "  " << tor << "  " << h.describe(g.degree) << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------- T-equivalence

ThinSolver::ThinSolver(const CornerNerve& nv, int n) : nv_(nv), n_(n) {
  if (nv.side() != 0) fail(Errc::BadArgument, "T-equivalence lives in the branching nerve");
  if (n < 0 || nv.top() < n + 1) fail(Errc::DimensionCap, "T-equivalence needs the nerve one degree up");
  const OmegaCategory& c = nv.category();
  lattice_ = std::make_unique<LatticeReducer>(static_cast<int>(nv.cubes(n).size()), true);
  const auto& cubes = nv.cubes(n);
  for (int i = 0; i < static_cast<int>(cubes.size()); ++i)
    if (is_thin(c, cubes[i])) {
      SVec v;
      v.add(i, 1);
      lattice_->add(v);
      gen_label_.push_back(nv.label(cubes[i]));
      gen_kind_.push_back(0);
    }
  for (const auto& y : nv.cubes(n + 1))
    if (is_thin(c, y)) {
      lattice_->add(nv.boundary(y));
      gen_label_.push_back(nv.label(y));
      gen_kind_.push_back(1);
    }
  lattice_->finalize();
}

SVec ThinSolver::vector(const CubeChain& x) const {
  SVec v;
  for (const auto& [cube, a] : x) {
    if (cube.n != n_) fail(Errc::BadArgument, "chain of the wrong degree");
    int k = nv_.find(cube);
    if (k < 0) {
      if (is_thin(nv_.category(), cube)) continue;
      fail(Errc::NotBranching, "chain term outside the branching nerve");
    }
    v.add(k, a);
  }
  v.normalize();
  return v;
}

TCertificate ThinSolver::solve(const SVec& diff) const {
  TCertificate t;
  SVec cert;
  SVec rest = lattice_->reduce(diff, &cert);
  t.equivalent = rest.empty();
  if (!t.equivalent) return t;
  cert.normalize();
  for (const auto& [g, a] : cert.e) (gen_kind_[g] == 0 ? t.thin : t.thin_boundaries).emplace_back(gen_label_[g], a);
  return t;
}

TCertificate ThinSolver::equivalent(const CubeChain& x, const CubeChain& y) const {
  SVec d = SVec::axpy(vector(x), -1, vector(y));
  return solve(d);
}

bool ThinSolver::normalized_boundary(const SVec& diff) const {
  std::call_once(normalized_once_, [&] {
    const auto& cubes = nv_.cubes(n_);
    auto r = std::make_unique<LatticeReducer>(static_cast<int>(cubes.size()));
    for (int i = 0; i < static_cast<int>(cubes.size()); ++i)
      for (int k = 1; k <= n_ - 1; ++k)
        if (connection(face(cubes[i], k, 0), k, 0) == cubes[i]) {
          SVec v;
          v.add(i, 1);
          r->add(v);
          break;
        }
    for (const auto& y : nv_.cubes(n_ + 1)) r->add(nv_.boundary(y));
    r->finalize();
    normalized_ = std::move(r);
  });
  return normalized_->contains(diff);
}

TCertificate t_equivalent(const OmegaCategory& c, const CubeChain& x, const CubeChain& y, int n) {
  CornerNerve nv(c, 0, n + 1, true);
  return ThinSolver(nv, n).equivalent(x, y);
}

// ---------------------------------------------------------------- calcul

bool CalculReport::ok() const {
  for (const auto& r : rows)
    if (!r.match) return false;
  return true;
}

namespace {

int eval_tree(const OmegaCategory& c, const PastingTree& t, const std::vector<int>& img) {
  if (t.is_leaf()) return img[t.leaf];
  int a = eval_tree(c, *t.left, img);
  if (a < 0) return -1;
  int b = eval_tree(c, *t.right, img);
  if (b < 0) return -1;
  return c.compose(a, b, t.level);
}

struct OrientalData {
  std::shared_ptr<Scheme> s;
  std::vector<TreePtr> src, tgt;  // boundary trees per cell of dimension >= 1
};

OrientalData oriental_data(int n) {
  OrientalData d;
  d.s = oriental_scheme(n);
  const Scheme& S = *d.s;
  d.src.resize(S.size());
  d.tgt.resize(S.size());
  for (int k = 0; k < S.size(); ++k) {
    if (S.dim[k] == 0) continue;
    CellSet cl = S.close([&] {
      CellSet one(S.size());
      one.set(k);
      return one;
    }());
    for (int side = 0; side < 2; ++side) {
      TreePtr t = S.decompose(S.boundary(cl, S.dim[k] - 1, side));
      if (!t) fail(Errc::NotDecomposable, "oriental boundary is not a molecule");
      (side ? d.tgt : d.src)[k] = t;
    }
  }
  return d;
}

void simplex_dfs(const OmegaCategory& c, const OrientalData& d, std::size_t k, std::vector<int>& img,
                 std::vector<std::vector<int>>& out, std::size_t budget) {
  const Scheme& S = *d.s;
  if (k == static_cast<std::size_t>(S.size())) {
    if (out.size() >= budget) fail(Errc::ClosureBudgetExceeded, "simplicial nerve exceeds the budget");
    out.push_back(img);
    return;
  }
  const int p = S.dim[k];
  if (p == 0) {
    for (int o : c.objects()) {
      img[k] = o;
      simplex_dfs(c, d, k + 1, img, out, budget);
    }
  } else {
    int a = eval_tree(c, *d.src[k], img);
    int b = a < 0 ? -1 : eval_tree(c, *d.tgt[k], img);
    if (b >= 0)
      for (int u : c.with_boundary(p, a, b)) {
        img[k] = u;
        simplex_dfs(c, d, k + 1, img, out, budget);
      }
  }
  img[k] = -1;
}

}  // namespace

std::vector<std::vector<int>> enumerate_simplices(const OmegaCategory& c, int n, std::size_t budget) {
  if (n < 0) fail(Errc::BadArgument, "negative degree");
  if (n > Limits::hard_cap) fail(Errc::DimensionCap, "simplicial degree exceeds the cap");
  OrientalData d = oriental_data(n);
  std::vector<int> img(d.s->size(), -1);
  std::vector<std::vector<int>> out;
  simplex_dfs(c, d, 0, img, out, budget);
  std::sort(out.begin(), out.end());
  return out;
}

ChainComplex simplicial_complex(const OmegaCategory& c, int up_to) {
  const int top = up_to + 1;
  std::vector<std::vector<std::vector<int>>> simp(top + 1);
  std::vector<std::map<std::vector<int>, int>> index(top + 1);
  for (int n = 0; n <= top; ++n) {
    simp[n] = enumerate_simplices(c, n);
    for (int i = 0; i < static_cast<int>(simp[n].size()); ++i) index[n].emplace(simp[n][i], i);
  }
  ChainComplex cx;
  cx.basis.resize(top + 1);
  cx.d.resize(top + 1);
  for (int n = 0; n <= top; ++n)
    for (const auto& s : simp[n]) {
      std::string l = "(";
      for (std::size_t k = 0; k < s.size(); ++k) l += (k ? "," : "") + std::to_string(s[k]);
      cx.basis[n].push_back(l + ")");
    }
  for (int n = 1; n <= top; ++n) {
    auto Sn = oriental_scheme(n);
    auto Sl = oriental_scheme(n - 1);
    // cofaces: cell of O^{n-1} -> cell of O^n skipping vertex i
    std::vector<std::vector<int>> coface(n + 1, std::vector<int>(Sl->size()));
    for (int i = 0; i <= n; ++i)
      for (int k = 0; k < Sl->size(); ++k) {
        std::string lab;
        for (char ch : Sl->label[k]) {
          int v = ch - '0';
          lab += static_cast<char>('0' + (v >= i ? v + 1 : v));
        }
        coface[i][k] = Sn->find_label(lab);
      }
    SparseMatrix m(static_cast<int>(simp[n - 1].size()), static_cast<int>(simp[n].size()));
    for (int j = 0; j < m.cols; ++j) {
      SVec v;
      for (int i = 0; i <= n; ++i) {
        std::vector<int> f(Sl->size());
        for (int k = 0; k < Sl->size(); ++k) f[k] = simp[n][j][coface[i][k]];
        auto it = index[n - 1].find(f);
        if (it == index[n - 1].end()) fail(Errc::Internal, "simplicial face left the nerve");
        v.add(it->second, (i % 2 == 0) ? 1 : -1);
      }
      v.normalize();
      m.col[j] = std::move(v);
    }
    cx.d[n] = std::move(m);
  }
  return cx;
}

CalculReport calcul_crosscheck(const OmegaCategory& c, int up_to) {
  if (!c.length_at_most_one()) fail(Errc::NotLengthAtMostOne, "the cross-check needs length at most one");
  if (up_to < 2) fail(Errc::BadArgument, "the cross-check needs up_to >= 2");
  HomologySummary corner = complex_homology(corner_complex(c, 0, up_to), up_to);
  OmegaCategory pc = path_shift(c);
  HomologySummary path = complex_homology(simplicial_complex(pc, up_to - 1), up_to - 1);
  CalculReport r;
  for (int n = 1; n <= up_to - 1; ++n) {
    CalculRow row;
    row.n = n;
    row.corner = corner.at(n + 1);
    row.path = path.at(n);
    row.match = row.corner.betti == row.path.betti && row.corner.torsion == row.path.torsion;
    r.rows.push_back(row);
  }
  return r;
}

// ---------------------------------------------------------------- diff

DiffReport diff_formula_check(const OmegaCategory& c, int n) {
  if (n < 2) fail(Errc::BadArgument, "the identities start in degree two");
  CornerNerve nv(c, 0, n);
  ThinSolver solver(nv, n - 1);
  DiffReport r;
  for (const auto& x : nv.cubes(n)) {
    for (int side = 0; side < 2; ++side) {
      CubeChain lhs{{box_minus(c, c.d(x.interior(), n - 1, side), n - 1), 1}};
      CubeChain rhs;
      for (int k = side == 0 ? 1 : 2; k <= n; k += 2)
        rhs.push_back({box_minus(c, face(x, k, 0).interior(), n - 1), 1});
      ++r.checked;
      if (!solver.equivalent(lhs, rhs).equivalent) {
        ++r.failed;
        if (r.example.empty())
          r.example = (side ? "target " : "source ") + cube_json(c, x);
      }
    }
  }
  return r;
}

}  // namespace corner
