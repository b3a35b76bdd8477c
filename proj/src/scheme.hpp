#pragma once

#include "precub.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace corner {

class CellSet {
 public:
  CellSet() = default;
  explicit CellSet(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int universe() const { return n_; }
  void set(int i) { w_[i >> 6] |= (uint64_t{1} << (i & 63)); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  bool empty() const;
  int count() const;
  std::vector<int> members() const;
  bool subset_of(const CellSet& o) const;

  CellSet& operator|=(const CellSet& o);
  CellSet& operator&=(const CellSet& o);
  friend CellSet operator|(CellSet a, const CellSet& b) { return a |= b; }
  friend CellSet operator&(CellSet a, const CellSet& b) { return a &= b; }
  bool operator==(const CellSet& o) const { return w_ == o.w_; }
  bool operator<(const CellSet& o) const { return w_ < o.w_; }
  std::size_t hash() const;

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

struct CellSetHash {
  std::size_t operator()(const CellSet& s) const { return s.hash(); }
};

// Binary pasting tree; leaves carry a cell of the owning scheme.
struct PastingTree {
  int level = -1;  // -1 for a leaf
  int leaf = -1;
  std::shared_ptr<const PastingTree> left, right;

  static std::shared_ptr<const PastingTree> make_leaf(int cell);
  static std::shared_ptr<const PastingTree> make_node(int p, std::shared_ptr<const PastingTree> l,
                                                      std::shared_ptr<const PastingTree> r);
  bool is_leaf() const { return level < 0; }
  std::string show(const std::function<std::string(int)>& name) const;
};
using TreePtr = std::shared_ptr<const PastingTree>;

// A finite loop-free pasting scheme: graded cells, each with its negative and
// positive codimension-one faces.  Molecules are face-closed cell subsets.
class Scheme {
 public:
  std::vector<int> dim;
  std::vector<std::string> label;
  std::vector<std::vector<int>> neg, pos;

  void finish();  // computes closures; call after filling the vectors

  int size() const { return static_cast<int>(dim.size()); }
  const CellSet& closure(int c) const { return closure_[c]; }
  CellSet close(const CellSet& s) const;
  CellSet atom_boundary(int c, int side) const;  // s_{d-1}R(c) or t_{d-1}R(c)
  int set_dim(const CellSet& s) const;
  std::vector<int> maximal(const CellSet& s) const;
  // s_k (side 0) or t_k (side 1) of a molecule; M itself when k >= dim M.
  CellSet boundary(const CellSet& m, int k, int side) const;
  bool composable(const CellSet& a, const CellSet& b, int p) const;
  int find_label(const std::string& l) const;

  // Pasting decomposition; nullptr when the set is not a molecule.
  TreePtr decompose(const CellSet& m) const;
  std::string print(const CellSet& s) const;

 private:
  TreePtr decompose_rec(const CellSet& m) const;

  std::vector<CellSet> closure_;
  std::unordered_map<std::string, int> by_label_;
  mutable std::unordered_map<CellSet, TreePtr, CellSetHash> memo_;
  mutable std::mutex mu_;
};

std::shared_ptr<Scheme> scheme_from_precubical(const PrecubicalSet& k);
std::shared_ptr<Scheme> oriental_scheme(int n);
// Globe on one p-cell A, or two parallel p-cells A and B.
std::shared_ptr<Scheme> globe_scheme(int p, bool two);

}  // namespace corner
