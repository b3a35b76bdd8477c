#include "scheme.hpp"

#include "error.hpp"

#include <algorithm>
#include <bit>

namespace corner {

bool CellSet::empty() const {
  for (uint64_t x : w_)
    if (x) return false;
  return true;
}

int CellSet::count() const {
  int c = 0;
  for (uint64_t x : w_) c += std::popcount(x);
  return c;
}

std::vector<int> CellSet::members() const {
  std::vector<int> r;
  for (std::size_t k = 0; k < w_.size(); ++k) {
    uint64_t x = w_[k];
    while (x) {
      int b = std::countr_zero(x);
      r.push_back(static_cast<int>(k * 64 + b));
      x &= x - 1;
    }
  }
  return r;
}

bool CellSet::subset_of(const CellSet& o) const {
  for (std::size_t k = 0; k < w_.size(); ++k)
    if (w_[k] & ~o.w_[k]) return false;
  return true;
}

CellSet& CellSet::operator|=(const CellSet& o) {
  for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
  return *this;
}

CellSet& CellSet::operator&=(const CellSet& o) {
  for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
  return *this;
}

std::size_t CellSet::hash() const {
  uint64_t h = 1469598103934665603ull;
  for (uint64_t x : w_) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

TreePtr PastingTree::make_leaf(int cell) {
  auto t = std::make_shared<PastingTree>();
  t->leaf = cell;
  return t;
}

TreePtr PastingTree::make_node(int p, TreePtr l, TreePtr r) {
  auto t = std::make_shared<PastingTree>();
  t->level = p;
  t->left = std::move(l);
  t->right = std::move(r);
  return t;
}

std::string PastingTree::show(const std::function<std::string(int)>& name) const {
  if (is_leaf()) return name(leaf);
  return "(" + left->show(name) + " *" + std::to_string(level) + " " + right->show(name) + ")";
}

// ---------------------------------------------------------------- Scheme

void Scheme::finish() {
  const int n = size();
  closure_.assign(n, CellSet(n));
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return dim[a] < dim[b]; });
  for (int c : order) {
    CellSet s(n);
    s.set(c);
    for (int f : neg[c]) s |= closure_[f];
    for (int f : pos[c]) s |= closure_[f];
    closure_[c] = std::move(s);
  }
  by_label_.clear();
  for (int i = 0; i < n; ++i) by_label_.emplace(label[i], i);
}

int Scheme::find_label(const std::string& l) const {
  auto it = by_label_.find(l);
  return it == by_label_.end() ? -1 : it->second;
}

CellSet Scheme::close(const CellSet& s) const {
  CellSet r(size());
  for (int c : s.members()) r |= closure_[c];
  return r;
}

CellSet Scheme::atom_boundary(int c, int side) const {
  CellSet r(size());
  for (int f : side == 0 ? neg[c] : pos[c]) r |= closure_[f];
  return r;
}

int Scheme::set_dim(const CellSet& s) const {
  int d = -1;
  for (int c : s.members()) d = std::max(d, dim[c]);
  return d;
}

std::vector<int> Scheme::maximal(const CellSet& s) const {
  CellSet covered(size());
  std::vector<int> mem = s.members();
  for (int c : mem) {
    for (int f : neg[c]) covered.set(f);
    for (int f : pos[c]) covered.set(f);
  }
  std::vector<int> r;
  for (int c : mem)
    if (!covered.test(c)) r.push_back(c);
  return r;
}

CellSet Scheme::boundary(const CellSet& m, int k, int side) const {
  std::vector<int> mem = m.members();
  int d = -1;
  for (int c : mem) d = std::max(d, dim[c]);
  if (k >= d) return m;
  CellSet excl(size()), covered(size()), keep(size());
  for (int c : mem) {
    for (int f : neg[c]) covered.set(f);
    for (int f : pos[c]) covered.set(f);
    if (dim[c] == k + 1)
      for (int f : side == 0 ? pos[c] : neg[c]) excl.set(f);
  }
  for (int c : mem) {
    if (dim[c] == k && !excl.test(c)) keep.set(c);
    if (dim[c] < k && !covered.test(c)) keep.set(c);
  }
  return close(keep);
}

bool Scheme::composable(const CellSet& a, const CellSet& b, int p) const {
  CellSet ta = boundary(a, p, 1);
  if (!(ta == boundary(b, p, 0))) return false;
  return (a & b) == ta;
}

TreePtr Scheme::decompose(const CellSet& m) const {
  std::lock_guard<std::mutex> lock(mu_);
  return decompose_rec(m);
}

TreePtr Scheme::decompose_rec(const CellSet& m) const {
  auto it = memo_.find(m);
  if (it != memo_.end()) return it->second;
  TreePtr result;
  std::vector<int> mx = maximal(m);
  if (mx.size() == 1 && closure_[mx[0]] == m) {
    result = PastingTree::make_leaf(mx[0]);
  } else if (!mx.empty()) {
    const int d = set_dim(m);
    for (int p = d - 1; p >= 0 && !result; --p) {
      std::vector<int> X;
      for (int c : mx)
        if (dim[c] > p) X.push_back(c);
      const int k = static_cast<int>(X.size());
      if (k < 2 || k > 20) continue;
      CellSet sp = boundary(m, p, 0), tp = boundary(m, p, 1);
      // subsets by increasing size, lexicographic within a size
      for (int sz = 1; sz < k && !result; ++sz) {
        std::vector<int> pick(sz);
        for (int i = 0; i < sz; ++i) pick[i] = i;
        for (;;) {
          CellSet L = sp, R = tp;
          std::vector<char> in(k, 0);
          for (int i : pick) in[i] = 1;
          for (int i = 0; i < k; ++i) (in[i] ? L : R) |= closure_[X[i]];
          if ((L | R) == m && !(L == m) && !(R == m)) {
            CellSet I = L & R;
            if (I == boundary(L, p, 1) && I == boundary(R, p, 0)) {
              TreePtr tl = decompose_rec(L);
              if (tl) {
                TreePtr tr = decompose_rec(R);
                if (tr) {
                  result = PastingTree::make_node(p, tl, tr);
                  break;
                }
              }
            }
          }
          int i = sz - 1;
          while (i >= 0 && pick[i] == k - sz + i) --i;
          if (i < 0) break;
          ++pick[i];
          for (int j = i + 1; j < sz; ++j) pick[j] = pick[j - 1] + 1;
        }
      }
    }
  }
  memo_.emplace(m, result);
  return result;
}

std::string Scheme::print(const CellSet& s) const {
  std::vector<std::string> names;
  for (int c : s.members()) names.push_back(label[c]);
  std::sort(names.begin(), names.end());
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? ", " : "") + names[i];
  return out + "}";
}

// ---------------------------------------------------------------- builders

std::shared_ptr<Scheme> scheme_from_precubical(const PrecubicalSet& k) {
  auto s = std::make_shared<Scheme>();
  const int n = k.size();
  s->dim.resize(n);
  s->label.resize(n);
  s->neg.resize(n);
  s->pos.resize(n);
  for (int c = 0; c < n; ++c) {
    const auto& cu = k.cube(c);
    s->dim[c] = cu.dim;
    s->label[c] = cu.id;
    for (int l = 1; l <= cu.dim; ++l) {
      // the l-th zero filled with (-)^l is a source face
      int src_sign = (l % 2) ? 0 : 1;
      s->neg[c].push_back(k.face(c, l, src_sign));
      s->pos[c].push_back(k.face(c, l, 1 - src_sign));
    }
    for (auto* v : {&s->neg[c], &s->pos[c]}) {
      std::sort(v->begin(), v->end());
      v->erase(std::unique(v->begin(), v->end()), v->end());
    }
  }
  s->finish();
  return s;
}

std::shared_ptr<Scheme> oriental_scheme(int n) {
  auto s = std::make_shared<Scheme>();
  std::vector<unsigned> masks;
  for (unsigned m = 1; m < (1u << (n + 1)); ++m) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    // lexicographic on the increasing sequence
    for (int i = 0; i < 32; ++i) {
      bool ia = (a >> i) & 1, ib = (b >> i) & 1;
      if (ia != ib) return ia;
    }
    return false;
  });
  std::unordered_map<unsigned, int> idx;
  for (std::size_t i = 0; i < masks.size(); ++i) idx[masks[i]] = static_cast<int>(i);
  const int N = static_cast<int>(masks.size());
  s->dim.resize(N);
  s->label.resize(N);
  s->neg.resize(N);
  s->pos.resize(N);
  for (int c = 0; c < N; ++c) {
    unsigned m = masks[c];
    std::vector<int> seq;
    for (int i = 0; i <= n; ++i)
      if ((m >> i) & 1) seq.push_back(i);
    s->dim[c] = static_cast<int>(seq.size()) - 1;
    for (int v : seq) s->label[c] += std::to_string(v);
    if (seq.size() < 2) continue;
    for (std::size_t j = 0; j < seq.size(); ++j) {
      unsigned f = m & ~(1u << seq[j]);
      (j % 2 == 0 ? s->neg[c] : s->pos[c]).push_back(idx[f]);
    }
  }
  s->finish();
  return s;
}

std::shared_ptr<Scheme> globe_scheme(int p, bool two) {
  auto s = std::make_shared<Scheme>();
  auto add = [&](int d, const std::string& l, std::vector<int> ng, std::vector<int> ps) {
    s->dim.push_back(d);
    s->label.push_back(l);
    s->neg.push_back(std::move(ng));
    s->pos.push_back(std::move(ps));
    return static_cast<int>(s->dim.size()) - 1;
  };
  int lo = -1, hi = -1;
  for (int k = 0; k < p; ++k) {
    std::vector<int> ng, ps;
    if (k > 0) {
      ng = {lo};
      ps = {hi};
    }
    int a = add(k, "s" + std::to_string(k) + "A", ng, ps);
    int b = add(k, "t" + std::to_string(k) + "A", ng, ps);
    lo = a;
    hi = b;
  }
  std::vector<int> ng, ps;
  if (p > 0) {
    ng = {lo};
    ps = {hi};
  }
  add(p, "A", ng, ps);
  if (two) add(p, "B", ng, ps);
  s->finish();
  return s;
}

}  // namespace corner
