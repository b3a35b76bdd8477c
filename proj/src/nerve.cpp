#include "nerve.hpp"

#include "error.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <unordered_map>

namespace corner {

namespace word {

int pow3(int k) {
  static const std::array<int, 13> table = [] {
    std::array<int, 13> t{};
    t[0] = 1;
    for (int i = 1; i < 13; ++i) t[i] = 3 * t[i - 1];
    return t;
  }();
  return table[k];
}

int count(int n) { return pow3(n); }

std::string str(int n, int code) {
  static const char letters[3] = {'-', '0', '+'};
  std::string w(n, '-');
  for (int i = n - 1; i >= 0; --i) {
    w[i] = letters[code % 3];
    code /= 3;
  }
  return w;
}

int code(const std::string& w) {
  int c = 0;
  for (char ch : w) {
    int d = ch == '-' ? 0 : ch == '0' ? 1 : ch == '+' ? 2 : -1;
    if (d < 0) fail(Errc::BadArgument, "invalid word '" + w + "'");
    c = 3 * c + d;
  }
  return c;
}

int letter(int n, int code, int i) { return (code / pow3(n - i)) % 3; }

int dim(int n, int code) {
  int d = 0;
  for (int i = 0; i < n; ++i, code /= 3)
    if (code % 3 == 1) ++d;
  return d;
}

int zero_word(int n) { return (pow3(n) - 1) / 2; }
int minus_word(int) { return 0; }
int plus_word(int n) { return pow3(n) - 1; }

int insert(int n, int code, int i, int l) {
  const int low = pow3(n - i + 1);
  return (code / low) * low * 3 + l * low + code % low;
}

int erase(int n, int code, int i) {
  const int low = pow3(n - i);
  return (code / (low * 3)) * low + code % low;
}

}  // namespace word

std::size_t SingularCubeHash::operator()(const SingularCube& x) const {
  std::size_t h = static_cast<std::size_t>(x.n) * 0x9e3779b97f4a7c15ull;
  for (int v : x.img) h = (h ^ static_cast<std::size_t>(v + 1)) * 1099511628211ull;
  return h;
}

// ---------------------------------------------------------------- geometry

namespace {

FlatTree flatten(const TreePtr& t, const std::function<int(int)>& leaf_key) {
  FlatTree f;
  std::function<int(const PastingTree&)> go = [&](const PastingTree& n) -> int {
    FlatTree::Node node;
    if (n.is_leaf()) {
      node.leaf = leaf_key(n.leaf);
    } else {
      node.level = n.level;
      node.left = go(*n.left);
      node.right = go(*n.right);
    }
    f.nodes.push_back(node);
    return static_cast<int>(f.nodes.size()) - 1;
  };
  f.root = go(*t);
  return f;
}

void monotone_paths(int n, int v, std::vector<int>& cur, std::vector<std::vector<int>>& out,
                    bool forward) {
  for (int i = 1; i <= n; ++i) {
    int l = word::letter(n, v, i);
    if (l != (forward ? 0 : 2)) continue;
    int step = word::pow3(n - i);
    int edge = forward ? v + step : v - step;
    int next = forward ? v + 2 * step : v - 2 * step;
    cur.push_back(edge);
    out.push_back(cur);
    monotone_paths(n, next, cur, out, forward);
    cur.pop_back();
  }
}

}  // namespace

const CubeGeometry& CubeGeometry::get(int n) {
  constexpr int kMax = Limits::hard_cap + 2;
  if (n < 0 || n > kMax) fail(Errc::DimensionCap, "cube degree " + std::to_string(n) + " exceeds the cap");
  static std::array<std::once_flag, kMax + 1> once;
  static std::array<std::unique_ptr<CubeGeometry>, kMax + 1> geo;
  std::call_once(once[n], [n] { geo[n].reset(new CubeGeometry(n)); });
  return *geo[n];
}

CubeGeometry::CubeGeometry(int n_) : n(n_), count(word::count(n_)) {
  in_ = std::make_shared<OmegaCategory>(build_In(n));
  const Scheme& S = *in_->scheme();
  dim.resize(count);
  for (int w = 0; w < count; ++w) dim[w] = word::dim(n, w);
  order.resize(count);
  for (int w = 0; w < count; ++w) order[w] = w;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return dim[a] < dim[b]; });
  auto leaf_word = [&](int cell) { return word::code(S.label[cell]); };
  src.resize(count);
  tgt.resize(count);
  for (int w = 0; w < count; ++w) {
    if (dim[w] == 0) continue;
    int c = S.find_label(word::str(n, w));
    for (int side = 0; side < 2; ++side) {
      TreePtr t = S.decompose(S.atom_boundary(c, side));
      if (!t) fail(Errc::Internal, "boundary of a cube atom does not decompose");
      (side == 0 ? src : tgt)[w] = flatten(t, leaf_word);
    }
  }
  for (int i = 1; i <= n; ++i) {
    initial_edges.push_back(word::pow3(n - i));
    final_edges.push_back(word::plus_word(n) - word::pow3(n - i));
  }
  std::vector<int> cur;
  monotone_paths(n, word::minus_word(n), cur, paths_from_initial, true);
  monotone_paths(n, word::plus_word(n), cur, paths_to_final, false);
  for (auto& p : paths_to_final) std::reverse(p.begin(), p.end());
  glue_.resize(n + 1);
  glue_once_ = std::vector<std::once_flag>(n + 1);
}

const OmegaCategory& CubeGeometry::In() const { return *in_; }

const std::vector<FlatTree>& CubeGeometry::glue(int j) const {
  if (j < 1 || j > n) fail(Errc::BadIndex, "glue direction out of range");
  std::call_once(glue_once_[j], [this, j] {
    // two copies of the n-cube glued along the j-th face
    auto canon = [&](int copy, int w) {
      if (copy == 1 && word::letter(n, w, j) == 0) {
        copy = 0;
        w += 2 * word::pow3(n - j);
      }
      return std::to_string(copy) + ":" + word::str(n, w);
    };
    std::vector<PrecubicalSet::RawCube> raw;
    for (int copy = 0; copy < 2; ++copy)
      for (int w = 0; w < count; ++w) {
        if (copy == 1 && word::letter(n, w, j) == 0) continue;
        PrecubicalSet::RawCube r;
        r.id = canon(copy, w);
        r.dim = dim[w];
        for (int i = 1; i <= n; ++i) {
          if (word::letter(n, w, i) != 1) continue;
          int step = word::pow3(n - i);
          r.faces.push_back(canon(copy, w - step));
          r.faces.push_back(canon(copy, w + step));
        }
        raw.push_back(std::move(r));
      }
    auto sch = scheme_from_precubical(PrecubicalSet::from_raw(std::move(raw)));
    auto leaf_key = [&](int cell) {
      const std::string& l = sch->label[cell];
      return (l[0] - '0') * count + word::code(l.substr(2));
    };
    std::vector<FlatTree> trees(count);
    for (int w = 0; w < count; ++w) {
      if (word::letter(n, w, j) != 1) continue;
      CellSet m = sch->closure(sch->find_label(canon(0, w))) |
                  sch->closure(sch->find_label(canon(1, w)));
      TreePtr t = sch->decompose(m);
      if (!t) fail(Errc::Internal, "glued cube does not decompose");
      trees[w] = flatten(t, leaf_key);
    }
    glue_[j] = std::move(trees);
  });
  return glue_[j];
}

int evaluate_boundary(const OmegaCategory& c, const SingularCube& x, int w, int side) {
  const CubeGeometry& g = CubeGeometry::get(x.n);
  if (g.dim[w] == 0) return x.img[w];
  const FlatTree& t = side == 0 ? g.src[w] : g.tgt[w];
  return evaluate_tree(c, t, t.root, [&](int leaf) { return x.img[leaf]; });
}

int evaluate_molecule(const OmegaCategory& c, const SingularCube& x, const CellSet& m) {
  const CubeGeometry& g = CubeGeometry::get(x.n);
  const Scheme& S = *g.In().scheme();
  TreePtr t = S.decompose(m);
  if (!t) fail(Errc::NotDecomposable, "cell set is not a molecule: " + S.print(m));
  FlatTree f = flatten(t, [&](int cell) { return word::code(S.label[cell]); });
  int r = evaluate_tree(c, f, f.root, [&](int leaf) { return x.img[leaf]; });
  if (r < 0) fail(Errc::IncompatibleAssignment, "composite undefined while evaluating " + S.print(m));
  return r;
}

// ---------------------------------------------------------------- enumeration

namespace {

int path_image(const OmegaCategory& c, const SingularCube& x, const std::vector<int>& path) {
  int r = x.img[path[0]];
  for (std::size_t k = 1; k < path.size() && r >= 0; ++k) r = c.compose(r, x.img[path[k]], 0);
  return r;
}

bool paths_genuine(const OmegaCategory& c, const SingularCube& x,
                   const std::vector<std::vector<int>>& paths) {
  for (const auto& p : paths) {
    int r = path_image(c, x, p);
    if (r < 0 || c.dim(r) < 1) return false;
  }
  return true;
}

class Enumerator {
 public:
  Enumerator(const OmegaCategory& c, int n, const EnumerateOptions& opt)
      : c_(c), g_(CubeGeometry::get(n)), opt_(opt) {
    x_.n = n;
    x_.img.assign(g_.count, -1);
    for (int w = 0; w < g_.count; ++w)
      if (g_.dim[w] == 1) edges_.push_back(w);
    auto plus_count = [&](int w) {
      int k = 0;
      for (int i = 1; i <= n; ++i) k += word::letter(n, w, i) == 2;
      return k;
    };
    std::stable_sort(edges_.begin(), edges_.end(),
                     [&](int a, int b) { return plus_count(a) < plus_count(b); });
    for (int w : g_.order)
      if (g_.dim[w] >= 2) high_.push_back(w);
    restrict_.assign(g_.count, 0);
    if (opt.filter == Filter::Branching)
      for (int e : g_.initial_edges) restrict_[e] = 1;
    if (opt.filter == Filter::Merging)
      for (int e : g_.final_edges) restrict_[e] = 1;
  }

  std::vector<SingularCube> run() {
    const int v0 = word::minus_word(x_.n);
    for (int o : c_.objects()) {
      x_.img[v0] = o;
      edge_step(0);
    }
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  void edge_step(std::size_t k) {
    if (k == edges_.size()) {
      high_step(0);
      return;
    }
    const int e = edges_[k];
    int pos = 0;
    for (int i = 1; i <= x_.n; ++i)
      if (word::letter(x_.n, e, i) == 1) pos = i;
    const int step = word::pow3(x_.n - pos);
    const int sv = e - step, tv = e + step;
    for (int u : c_.with_source(1, x_.img[sv])) {
      if (restrict_[e] && c_.dim(u) != 1) continue;
      const int target = c_.t(u, 0);
      const bool fresh = x_.img[tv] < 0;
      if (!fresh && x_.img[tv] != target) continue;
      x_.img[tv] = target;
      x_.img[e] = u;
      edge_step(k + 1);
      x_.img[e] = -1;
      if (fresh) x_.img[tv] = -1;
    }
  }

  void high_step(std::size_t k) {
    if (k == high_.size()) {
      finish();
      return;
    }
    const int w = high_[k];
    const int p = g_.dim[w];
    const int a = evaluate_tree(c_, g_.src[w], g_.src[w].root, [&](int l) { return x_.img[l]; });
    if (a < 0) return;
    const int b = evaluate_tree(c_, g_.tgt[w], g_.tgt[w].root, [&](int l) { return x_.img[l]; });
    if (b < 0) return;
    for (int u : c_.with_boundary(p, a, b)) {
      x_.img[w] = u;
      high_step(k + 1);
    }
    x_.img[w] = -1;
  }

  void finish() {
    if (opt_.thin_only && c_.dim(x_.interior()) >= x_.n) return;
    if (opt_.filter == Filter::Branching && !paths_genuine(c_, x_, g_.paths_from_initial)) return;
    if (opt_.filter == Filter::Merging && !paths_genuine(c_, x_, g_.paths_to_final)) return;
    if (out_.size() >= opt_.budget)
      fail(Errc::ClosureBudgetExceeded, "nerve enumeration exceeds the budget of " +
                                            std::to_string(opt_.budget) + " cubes");
    out_.push_back(x_);
  }

  const OmegaCategory& c_;
  const CubeGeometry& g_;
  EnumerateOptions opt_;
  SingularCube x_;
  std::vector<int> edges_, high_;
  std::vector<char> restrict_;
  std::vector<SingularCube> out_;
};

}  // namespace

std::vector<SingularCube> enumerate_cubes(const OmegaCategory& c, int n, const EnumerateOptions& opt) {
  if (n < 0) fail(Errc::BadArgument, "negative degree");
  if (n > Limits::hard_cap + 1) fail(Errc::DimensionCap, "nerve degree exceeds the cap");
  if (opt.filter != Filter::All && !c.non_contracting())
    fail(Errc::NotNonContracting, "branching and merging cubes need a non-contracting category");
  return Enumerator(c, n, opt).run();
}

// ---------------------------------------------------------------- operators

SingularCube face(const SingularCube& x, int i, int sign) {
  if (i < 1 || i > x.n) fail(Errc::BadIndex, "face index " + std::to_string(i) + " out of range");
  SingularCube r;
  r.n = x.n - 1;
  r.img.resize(word::count(r.n));
  const int l = sign ? 2 : 0;
  for (int v = 0; v < static_cast<int>(r.img.size()); ++v) r.img[v] = x.img[word::insert(r.n, v, i, l)];
  return r;
}

SingularCube degeneracy(const SingularCube& x, int i) {
  if (i < 1 || i > x.n + 1) fail(Errc::BadIndex, "degeneracy index " + std::to_string(i) + " out of range");
  SingularCube r;
  r.n = x.n + 1;
  r.img.resize(word::count(r.n));
  for (int w = 0; w < static_cast<int>(r.img.size()); ++w) r.img[w] = x.img[word::erase(r.n, w, i)];
  return r;
}

SingularCube connection(const SingularCube& x, int i, int sign) {
  if (i < 1 || i > x.n) fail(Errc::BadIndex, "connection index " + std::to_string(i) + " out of range");
  SingularCube r;
  r.n = x.n + 1;
  r.img.resize(word::count(r.n));
  for (int w = 0; w < static_cast<int>(r.img.size()); ++w) {
    int a = word::letter(r.n, w, i), b = word::letter(r.n, w, i + 1);
    int m = sign == 0 ? std::max(a, b) : std::min(a, b);
    int v = word::erase(r.n, w, i + 1);
    v += (m - a) * word::pow3(x.n - i);
    r.img[w] = x.img[v];
  }
  return r;
}

SingularCube cubical_compose(const OmegaCategory& c, const SingularCube& x, const SingularCube& y,
                             int j) {
  if (x.n != y.n) fail(Errc::NotComposable, "cubes of different degrees");
  if (j < 1 || j > x.n) fail(Errc::BadIndex, "composition direction out of range");
  if (!(face(x, j, 1) == face(y, j, 0)))
    fail(Errc::NotComposable, "positive face of the first cube differs from the negative face of the second");
  const CubeGeometry& g = CubeGeometry::get(x.n);
  const auto& trees = g.glue(j);
  SingularCube r;
  r.n = x.n;
  r.img.resize(g.count);
  for (int w = 0; w < g.count; ++w) {
    int l = word::letter(x.n, w, j);
    if (l == 0) {
      r.img[w] = x.img[w];
    } else if (l == 2) {
      r.img[w] = y.img[w];
    } else {
      const FlatTree& t = trees[w];
      r.img[w] = evaluate_tree(c, t, t.root, [&](int leaf) {
        return leaf >= g.count ? y.img[leaf - g.count] : x.img[leaf];
      });
      if (r.img[w] < 0) fail(Errc::NotComposable, "glued composite undefined");
    }
  }
  return r;
}

SingularCube constant_cube(int object, int n) {
  SingularCube r;
  r.n = n;
  r.img.assign(word::count(n), object);
  return r;
}

SingularCube edge_cube(const OmegaCategory& c, int u) {
  if (c.dim(u) > 1) fail(Errc::DimensionMismatch, "a 1-cube needs a morphism of dimension at most one");
  SingularCube r;
  r.n = 1;
  r.img = {c.s(u, 0), u, c.t(u, 0)};
  return r;
}

std::vector<SingularCube> shell_of(const SingularCube& x) {
  std::vector<SingularCube> f;
  for (int i = 1; i <= x.n; ++i)
    for (int s = 0; s < 2; ++s) f.push_back(face(x, i, s));
  return f;
}

bool is_thin(const OmegaCategory& c, const SingularCube& x) { return c.dim(x.interior()) < x.n; }

namespace {

SingularCube assemble_shell(const OmegaCategory& c, int n, const std::vector<SingularCube>& faces,
                            bool strict) {
  if (n < 1) fail(Errc::BadArgument, "shells exist from degree one");
  if (static_cast<int>(faces.size()) != 2 * n) fail(Errc::BadArgument, "a shell needs 2n faces");
  for (const auto& f : faces)
    if (f.n != n - 1) fail(Errc::BadArgument, "shell face of the wrong degree");
  if (strict) {
    for (int cls = 0; cls < 2; ++cls) {
      int thick = 0;
      for (int i = 1; i <= n; ++i) {
        int sign = ((i % 2 == 1) == (cls == 0)) ? 0 : 1;
        if (!is_thin(c, faces[2 * (i - 1) + sign])) ++thick;
      }
      if (thick != 1)
        fail(Errc::NotFillable, "each parity class of the shell needs exactly one non-thin face");
    }
  }
  SingularCube x;
  x.n = n;
  x.img.assign(word::count(n), -1);
  for (int i = 1; i <= n; ++i)
    for (int s = 0; s < 2; ++s) {
      const SingularCube& f = faces[2 * (i - 1) + s];
      for (int v = 0; v < static_cast<int>(f.img.size()); ++v) {
        int w = word::insert(n - 1, v, i, s ? 2 : 0);
        if (x.img[w] >= 0 && x.img[w] != f.img[v])
          fail(Errc::NotFillable, "shell faces disagree at " + word::str(n, w));
        x.img[w] = f.img[v];
      }
    }
  return x;
}

}  // namespace

SingularCube fill_shell(const OmegaCategory& c, int n, const std::vector<SingularCube>& faces, int u,
                        bool strict) {
  if (u < 0 || u >= c.size()) fail(Errc::BadArgument, "unknown interior morphism");
  SingularCube x = assemble_shell(c, n, faces, strict);
  const int z = word::zero_word(n);
  x.img[z] = u;
  if (c.dim(u) > n) fail(Errc::SourceMismatch, "interior has dimension above the degree");
  if (evaluate_boundary(c, x, z, 0) != c.s(u, n - 1) || evaluate_boundary(c, x, z, 1) != c.t(u, n - 1))
    fail(Errc::SourceMismatch, "interior boundary does not match the shell");
  return x;
}

SingularCube fill_thin_shell(const OmegaCategory& c, int n, const std::vector<SingularCube>& faces) {
  SingularCube x = assemble_shell(c, n, faces, false);
  const int z = word::zero_word(n);
  int a = evaluate_boundary(c, x, z, 0), b = evaluate_boundary(c, x, z, 1);
  if (a < 0 || a != b) fail(Errc::NotFillable, "shell has no thin filler");
  x.img[z] = a;
  return x;
}

bool is_functor(const OmegaCategory& c, const SingularCube& x) {
  const CubeGeometry& g = CubeGeometry::get(x.n);
  if (static_cast<int>(x.img.size()) != g.count) return false;
  for (int w = 0; w < g.count; ++w) {
    int u = x.img[w];
    if (u < 0 || u >= c.size()) return false;
    int p = g.dim[w];
    if (c.dim(u) > p) return false;
    if (p == 0) continue;
    if (evaluate_boundary(c, x, w, 0) != c.s(u, p - 1)) return false;
    if (evaluate_boundary(c, x, w, 1) != c.t(u, p - 1)) return false;
  }
  return true;
}

bool is_branching(const OmegaCategory& c, const SingularCube& x) {
  return paths_genuine(c, x, CubeGeometry::get(x.n).paths_from_initial);
}

bool is_merging(const OmegaCategory& c, const SingularCube& x) {
  return paths_genuine(c, x, CubeGeometry::get(x.n).paths_to_final);
}

CubeClass classify(const OmegaCategory& c, const SingularCube& x) {
  if (!c.non_contracting()) fail(Errc::NotNonContracting, "classification needs a non-contracting category");
  return {is_branching(c, x), is_merging(c, x), is_thin(c, x)};
}

SingularCube matrix2(const OmegaCategory& cat, const SingularCube& a, const SingularCube& b,
                     const SingularCube& c, const SingularCube& d, int col, int row) {
  return cubical_compose(cat, cubical_compose(cat, c, d, col), cubical_compose(cat, a, b, col), row);
}

std::string cube_json(const OmegaCategory& c, const SingularCube& x) {
  nlohmann::ordered_json images = nlohmann::ordered_json::object();
  for (int w = 0; w < static_cast<int>(x.img.size()); ++w)
    images[word::str(x.n, w)] = OmegaCategory::ref(x.img[w]);
  nlohmann::ordered_json j{{"images", images}};
  if (c.non_contracting()) {
    CubeClass k = classify(c, x);
    j["branching"] = k.branching;
    j["merging"] = k.merging;
  }
  j["thin"] = is_thin(c, x);
  return j.dump();
}

// ---------------------------------------------------------------- harness

bool AxiomReport::ok() const { return failures() == 0; }

long AxiomReport::failures() const {
  long f = 0;
  for (const auto& s : stats) f += s.failed;
  return f;
}

std::string AxiomReport::table() const {
  std::ostringstream os;
  for (const auto& s : stats) {
    os << s.id << "\tchecked " << s.checked << "\tfailed " << s.failed;
    if (!s.example.empty()) os << "\t" << s.example;
    os << "\n";
  }
  return os.str();
}

namespace {

class Harness {
 public:
  Harness(const OmegaCategory& c, const AxiomOptions& opt) : c_(c), opt_(opt), rng_(opt.seed) {
    const char* ids[] = {"cube-1", "cube-2", "cube-3", "cube-4", "cube-5"};
    for (const char* id : ids) add(id);
    for (int k = 1; k <= 21; ++k) add("omega-" + std::to_string(k));
  }

  AxiomReport run() {
    for (int n = 0; n <= opt_.n_max; ++n) {
      auto all = enumerate_cubes(c_, n);
      std::vector<int> pick = sample(static_cast<int>(all.size()));
      for (int k : pick) unary(all[k]);
      if (n >= 1) binary(all, pick);
    }
    AxiomReport r;
    for (const auto& [id, s] : stats_) r.stats.push_back(s);
    std::sort(r.stats.begin(), r.stats.end(), [](const AxiomStat& a, const AxiomStat& b) {
      auto key = [](const std::string& s) {
        auto p = s.find('-');
        return std::make_pair(s.substr(0, p), std::stoi(s.substr(p + 1)));
      };
      return key(a.id) < key(b.id);
    });
    return r;
  }

 private:
  void add(const std::string& id) { stats_[id].id = id; }

  std::vector<int> sample(int size) {
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    if (opt_.samples == 0 || static_cast<std::size_t>(size) <= opt_.samples) return idx;
    for (std::size_t i = 0; i < opt_.samples; ++i) {
      std::size_t j = i + rng_() % (size - i);
      std::swap(idx[i], idx[j]);
    }
    idx.resize(opt_.samples);
    std::sort(idx.begin(), idx.end());
    return idx;
  }

  SingularCube F(const SingularCube& x, int i, int a) const {
    return face(x, i, (opt_.fault_face && i == 2) ? 1 - a : a);
  }
  SingularCube E(const SingularCube& x, int i) const { return degeneracy(x, i); }
  SingularCube G(const SingularCube& x, int i, int s) const { return connection(x, i, s); }
  SingularCube P(const SingularCube& x, const SingularCube& y, int j) const {
    return cubical_compose(c_, x, y, j);
  }

  void check(const std::string& id, const std::function<bool()>& f, const std::string& where) {
    AxiomStat& s = stats_[id];
    ++s.checked;
    bool ok = false;
    try {
      ok = f();
    } catch (const Error& e) {
      ok = false;
    }
    if (!ok) {
      ++s.failed;
      if (s.example.empty()) s.example = where;
    }
  }

  static std::string at(const std::string& what, std::initializer_list<int> idx) {
    std::string s = what;
    for (int i : idx) s += " " + std::to_string(i);
    return s;
  }

  void unary(const SingularCube& x) {
    const int n = x.n;
    for (int j = 1; j <= n; ++j)
      for (int i = 1; i < j; ++i)
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b)
            check("cube-1", [&] { return F(F(x, j, b), i, a) == F(F(x, i, a), j - 1, b); },
                  at("i j a b", {i, j, a, b}));
    for (int j = 1; j <= n + 1; ++j)
      for (int i = 1; i <= j; ++i)
        check("cube-2", [&] { return E(E(x, j), i) == E(E(x, i), j + 1); }, at("i j", {i, j}));
    for (int j = 1; j <= n + 1; ++j)
      for (int i = 1; i <= n + 1; ++i)
        for (int a = 0; a < 2; ++a) {
          if (i < j)
            check("cube-3", [&] { return F(E(x, j), i, a) == E(F(x, i, a), j - 1); }, at("i j", {i, j}));
          if (i > j)
            check("cube-4", [&] { return F(E(x, j), i, a) == E(F(x, i - 1, a), j); }, at("i j", {i, j}));
          if (i == j) check("cube-5", [&] { return F(E(x, i), i, a) == x; }, at("i", {i}));
        }
    if (n < 1) return;
    for (int j = 1; j <= n; ++j)
      for (int b = 0; b < 2; ++b) {
        for (int i = 1; i <= n + 1; ++i)
          for (int a = 0; a < 2; ++a) {
            if (i < j)
              check("omega-1", [&] { return F(G(x, j, b), i, a) == G(F(x, i, a), j - 1, b); },
                    at("i j", {i, j}));
            if (i > j + 1)
              check("omega-2", [&] { return F(G(x, j, b), i, a) == G(F(x, i - 1, a), j, b); },
                    at("i j", {i, j}));
          }
        check("omega-3", [&] { return F(G(x, j, b), j, b) == x && F(G(x, j, b), j + 1, b) == x; },
              at("j", {j}));
        const int o = 1 - b;
        check("omega-4",
              [&] {
                SingularCube e = E(F(x, j, o), j);
                return F(G(x, j, b), j, o) == e && F(G(x, j, b), j + 1, o) == e;
              },
              at("j", {j}));
      }
    for (int s = 0; s < 2; ++s)
      for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n + 1; ++i) {
          if (i <= j) check("omega-5", [&] { return G(G(x, j, s), i, s) == G(G(x, i, s), j + 1, s); }, at("i j", {i, j}));
          if (i < j)
            check("omega-6", [&] { return G(G(x, j, 1 - s), i, s) == G(G(x, i, s), j + 1, 1 - s); }, at("i j", {i, j}));
          if (i > j + 1)
            check("omega-7", [&] { return G(G(x, j, 1 - s), i, s) == G(G(x, i - 1, s), j, 1 - s); }, at("i j", {i, j}));
        }
    for (int s = 0; s < 2; ++s)
      for (int j = 1; j <= n + 1; ++j)
        for (int i = 1; i <= n + 1; ++i) {
          if (i < j) check("omega-8", [&] { return G(E(x, j), i, s) == E(G(x, i, s), j + 1); }, at("i j", {i, j}));
          if (i == j) check("omega-9", [&] { return G(E(x, j), i, s) == E(E(x, i), i); }, at("i", {i}));
          if (i > j) check("omega-10", [&] { return G(E(x, j), i, s) == E(G(x, i - 1, s), j); }, at("i j", {i, j}));
        }
    for (int j = 1; j <= n; ++j) {
      check("omega-20",
            [&] {
              return P(G(x, j, 1), G(x, j, 0), j + 1) == E(x, j) &&
                     P(G(x, j, 1), G(x, j, 0), j) == E(x, j + 1);
            },
            at("j", {j}));
      check("omega-21",
            [&] { return P(E(F(x, j, 0), j), x, j) == x && P(x, E(F(x, j, 1), j), j) == x; },
            at("j", {j}));
    }
  }

  // Partners y with d_j^- y = d_j^+ x, indexed per direction.
  using FaceIndex = std::unordered_map<SingularCube, std::vector<int>, SingularCubeHash>;

  const std::vector<int>& partners(const FaceIndex& idx, const SingularCube& f) {
    static const std::vector<int> none;
    auto it = idx.find(f);
    return it == idx.end() ? none : it->second;
  }

  std::vector<int> choose(const std::vector<int>& v, std::size_t k) {
    if (k == 0 || v.size() <= k) return v;
    std::vector<int> r;
    for (std::size_t t = 0; t < k; ++t) r.push_back(v[rng_() % v.size()]);
    return r;
  }

  void binary(const std::vector<SingularCube>& all, const std::vector<int>& pick) {
    const int n = all.front().n;
    std::vector<FaceIndex> neg(n + 1);
    for (int k = 0; k < static_cast<int>(all.size()); ++k)
      for (int j = 1; j <= n; ++j) neg[j][face(all[k], j, 0)].push_back(k);
    const std::size_t per = opt_.partners;
    for (int k : pick) {
      const SingularCube& x = all[k];
      for (int j = 1; j <= n; ++j) {
        for (int yk : choose(partners(neg[j], face(x, j, 1)), per)) {
          const SingularCube& y = all[yk];
          SingularCube xy;
          try {
            xy = P(x, y, j);
          } catch (const Error&) {
            check("omega-12", [] { return false; }, at("compose j", {j}));
            continue;
          }
          check("omega-12", [&] { return F(xy, j, 0) == F(x, j, 0); }, at("j", {j}));
          check("omega-13", [&] { return F(xy, j, 1) == F(y, j, 1); }, at("j", {j}));
          for (int i = 1; i <= n; ++i)
            for (int a = 0; a < 2; ++a) {
              if (i < j)
                check("omega-14", [&] { return F(xy, i, a) == P(F(x, i, a), F(y, i, a), j - 1); }, at("i j", {i, j}));
              if (i > j)
                check("omega-14", [&] { return F(xy, i, a) == P(F(x, i, a), F(y, i, a), j); }, at("i j", {i, j}));
            }
          for (int i = 1; i <= n + 1; ++i)
            check("omega-16",
                  [&] { return E(xy, i) == P(E(x, i), E(y, i), i <= j ? j + 1 : j); },
                  at("i j", {i, j}));
          for (int s = 0; s < 2; ++s)
            for (int i = 1; i <= n; ++i) {
              if (i != j)
                check("omega-17",
                      [&] { return G(xy, i, s) == P(G(x, i, s), G(y, i, s), i < j ? j + 1 : j); },
                      at("i j", {i, j}));
            }
          check("omega-18",
                [&] {
                  return G(xy, j, 0) ==
                         matrix2(c_, E(y, j + 1), G(y, j, 0), G(x, j, 0), E(y, j), j + 1, j);
                },
                at("j", {j}));
          check("omega-19",
                [&] {
                  return G(xy, j, 1) ==
                         matrix2(c_, E(x, j), G(y, j, 1), G(x, j, 1), E(x, j + 1), j + 1, j);
                },
                at("j", {j}));
          // associativity
          for (int zk : choose(partners(neg[j], face(y, j, 1)), per)) {
            const SingularCube& z = all[zk];
            check("omega-11", [&] { return P(xy, z, j) == P(x, P(y, z, j), j); }, at("j", {j}));
          }
          // interchange with a second direction
          for (int i = 1; i <= n; ++i) {
            if (i == j) continue;
            for (int zk : choose(partners(neg[i], face(x, i, 1)), per)) {
              const SingularCube& z = all[zk];
              // t with d_i^- t = d_i^+ y and d_j^- t = d_j^+ z
              for (int tk : partners(neg[i], face(y, i, 1))) {
                const SingularCube& t = all[tk];
                if (!(face(t, j, 0) == face(z, j, 1))) continue;
                // (x +_j y) +_i (z +_j t) = (x +_i z) +_j (y +_i t)
                check("omega-15",
                      [&] { return P(xy, P(z, t, j), i) == P(P(x, z, i), P(y, t, i), j); },
                      at("i j", {i, j}));
                break;
              }
            }
          }
        }
      }
    }
  }

  const OmegaCategory& c_;
  AxiomOptions opt_;
  std::mt19937_64 rng_;
  std::map<std::string, AxiomStat> stats_;
};

}  // namespace

AxiomReport axiom_report(const OmegaCategory& c, const AxiomOptions& opt) {
  if (opt.n_max > Limits::hard_cap) fail(Errc::DimensionCap, "harness degree exceeds the cap");
  return Harness(c, opt).run();
}

}  // namespace corner
