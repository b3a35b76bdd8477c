#pragma once

#include "category.hpp"

#include <cstdint>
#include <mutex>
#include <string>
#include <vector>

namespace corner {

// Words of cub^n are coded in base 3, first letter most significant,
// with '-' = 0, '0' = 1, '+' = 2.
namespace word {
int pow3(int k);
int count(int n);
std::string str(int n, int code);
int code(const std::string& w);
int letter(int n, int code, int i);  // 1-based position
int dim(int n, int code);
int zero_word(int n);
int minus_word(int n);
int plus_word(int n);
int insert(int n, int code, int i, int letter);  // word of length n+1
int erase(int n, int code, int i);               // word of length n-1
}  // namespace word

// A singular n-cube: an omega-functor I^n -> C given by the image of every
// word of cub^n.
struct SingularCube {
  int n = 0;
  std::vector<int> img;

  int interior() const { return img[word::zero_word(n)]; }
  bool operator==(const SingularCube& o) const { return n == o.n && img == o.img; }
  bool operator<(const SingularCube& o) const {
    return n != o.n ? n < o.n : img < o.img;
  }
};

struct SingularCubeHash {
  std::size_t operator()(const SingularCube& x) const;
};

// Flattened pasting tree whose leaves are integer keys.
struct FlatTree {
  struct Node {
    int level = -1, leaf = -1, left = -1, right = -1;
  };
  std::vector<Node> nodes;
  int root = -1;
};

// Evaluates a tree in C with leaf images given by `leaf_image`; -1 when a
// composite is undefined.
template <class F>
int evaluate_tree(const OmegaCategory& c, const FlatTree& t, int node, F&& leaf_image) {
  const auto& nd = t.nodes[node];
  if (nd.level < 0) return leaf_image(nd.leaf);
  int a = evaluate_tree(c, t, nd.left, leaf_image);
  if (a < 0) return -1;
  int b = evaluate_tree(c, t, nd.right, leaf_image);
  if (b < 0) return -1;
  return c.compose(a, b, nd.level);
}

// Combinatorial data of I^n shared by all cubes of degree n.
class CubeGeometry {
 public:
  static const CubeGeometry& get(int n);

  int n = 0;
  int count = 0;
  std::vector<int> dim;           // per word
  std::vector<int> order;         // words by (dim, code)
  std::vector<FlatTree> src, tgt;  // s_{p-1}R(w), t_{p-1}R(w) with word leaves
  std::vector<int> initial_edges, final_edges;
  std::vector<std::vector<int>> paths_from_initial;  // monotone edge paths
  std::vector<std::vector<int>> paths_to_final;

  // Decomposition of the glued cube for +_j; leaf = copy * count + word with
  // copy 0 for the first cube and 1 for the second. Entry per word with
  // letter j equal to 0, -1 elsewhere.
  const std::vector<FlatTree>& glue(int j) const;

  const OmegaCategory& In() const;

 private:
  explicit CubeGeometry(int n);
  std::shared_ptr<OmegaCategory> in_;
  mutable std::vector<std::vector<FlatTree>> glue_;
  mutable std::vector<std::once_flag> glue_once_;
};

// Evaluates the image under x of the source (side 0) or target of R(w).
int evaluate_boundary(const OmegaCategory& c, const SingularCube& x, int w, int side);
// Evaluates an arbitrary molecule of I^n, given as a scheme cell set of In().
int evaluate_molecule(const OmegaCategory& c, const SingularCube& x, const CellSet& m);

enum class Filter { All, Branching, Merging };

struct EnumerateOptions {
  Filter filter = Filter::All;
  std::size_t budget = 2000000;
  bool thin_only = false;
};

// All singular n-cubes of C (optionally only branching / merging ones),
// sorted by image table.
std::vector<SingularCube> enumerate_cubes(const OmegaCategory& c, int n,
                                          const EnumerateOptions& opt = {});

// Cubical operators. Indices are 1-based; sign 0 is -, 1 is +.
SingularCube face(const SingularCube& x, int i, int sign);
SingularCube degeneracy(const SingularCube& x, int i);
SingularCube connection(const SingularCube& x, int i, int sign);
SingularCube cubical_compose(const OmegaCategory& c, const SingularCube& x,
                             const SingularCube& y, int j);
// Constant n-cube on a 0-morphism.
SingularCube constant_cube(int object, int n);
// The 1-cube of a morphism of dimension at most one.
SingularCube edge_cube(const OmegaCategory& c, int u);

// Faces of an n-cube in slot order 2*(i-1)+sign.
std::vector<SingularCube> shell_of(const SingularCube& x);
// The unique n-cube with the given faces and interior u. Strict mode also
// requires the fillability condition on thin faces.
SingularCube fill_shell(const OmegaCategory& c, int n, const std::vector<SingularCube>& faces,
                        int u, bool strict);
// Fills a shell whose interior is forced: the evaluated source of the top
// word, which must equal the evaluated target.
SingularCube fill_thin_shell(const OmegaCategory& c, int n, const std::vector<SingularCube>& faces);

bool is_functor(const OmegaCategory& c, const SingularCube& x);

struct CubeClass {
  bool branching = false;
  bool merging = false;
  bool thin = false;
};
CubeClass classify(const OmegaCategory& c, const SingularCube& x);
bool is_branching(const OmegaCategory& c, const SingularCube& x);
bool is_merging(const OmegaCategory& c, const SingularCube& x);
bool is_thin(const OmegaCategory& c, const SingularCube& x);

// Matrix composite [[a, b], [c, d]] with columns along direction `col` and
// rows, read bottom to top, along direction `row`.
SingularCube matrix2(const OmegaCategory& cat, const SingularCube& a, const SingularCube& b,
                     const SingularCube& c, const SingularCube& d, int col, int row);

// Property harness for the cubical set and cubical omega-category axioms.
struct AxiomStat {
  std::string id;
  long checked = 0;
  long failed = 0;
  std::string example;
};

struct AxiomReport {
  std::vector<AxiomStat> stats;
  bool ok() const;
  long failures() const;
  std::string table() const;
};

struct AxiomOptions {
  int n_max = 3;
  std::size_t samples = 200;  // cubes per degree, 0 for all
  std::size_t partners = 2;   // composable partners per cube and direction, 0 for all
  uint64_t seed = 0;
  bool fault_face = false;  // corrupts the face operator, for harness tests
};

AxiomReport axiom_report(const OmegaCategory& c, const AxiomOptions& opt);

std::string cube_json(const OmegaCategory& c, const SingularCube& x);

}  // namespace corner
