#pragma once

#include "scheme.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace corner {

struct BuildOptions {
  std::size_t budget = 200000;  // maximal number of morphisms
};

// A finite strict omega-category given by its morphism table.
class OmegaCategory {
 public:
  struct Morph {
    int dim = 0;
    std::string name;
    std::vector<int> src, tgt;  // src[k] = s_k for k < dim
    int left = -1, right = -1, level = -1;  // provenance of composites
    int atom = -1;                          // generating cell, if an atom
  };

  int size() const { return static_cast<int>(mor_.size()); }
  const Morph& morph(int m) const { return mor_[m]; }
  int dim(int m) const { return mor_[m].dim; }
  const std::string& name(int m) const { return mor_[m].name; }
  int s(int m, int k) const { return k >= mor_[m].dim ? m : mor_[m].src[k]; }
  int t(int m, int k) const { return k >= mor_[m].dim ? m : mor_[m].tgt[k]; }
  int d(int m, int k, int side) const { return side == 0 ? s(m, k) : t(m, k); }
  // Checked form of d: m itself at k = dim m, BadLevel beyond.
  int boundary_of(int m, int k, int side) const;
  int compose(int a, int b, int p) const;  // -1 when undefined
  int max_dim() const { return max_dim_; }
  std::vector<int> of_dim(int d) const;
  const std::vector<int>& objects() const { return objects_; }
  const std::vector<int>& atoms() const { return atoms_; }
  int find_name(const std::string& n) const;

  // Morphisms u with dim u <= p, s_{p-1}u = a and t_{p-1}u = b (p >= 1).
  const std::vector<int>& with_boundary(int p, int a, int b) const;
  // Morphisms u with dim u <= p and s_{p-1}u = a (p >= 1).
  const std::vector<int>& with_source(int p, int a) const;

  bool non_contracting() const { return non_contracting_; }
  bool length_at_most_one() const { return length_one_; }

  // Molecule data, present for categories built from a scheme.
  const std::shared_ptr<const Scheme>& scheme() const { return scheme_; }
  const CellSet& cells(int m) const { return cells_.at(m); }
  bool has_cells() const { return !cells_.empty(); }
  int find_cells(const CellSet& c) const;

  // Non-degenerate composition entries (a, b, p) -> c.
  struct Entry {
    int a, b, p, c;
  };
  std::vector<Entry> composition_entries() const;

  // Construction interface.
  int add(Morph m, std::optional<CellSet> cells = std::nullopt);
  void set_compose(int a, int b, int p, int c);
  void finish();

  // Morphism id as a short string, e.g. "m12".
  static std::string ref(int m) { return "m" + std::to_string(m); }
  std::string describe(int m) const;

 private:
  static uint64_t key(int a, int b, int p) {
    return (uint64_t(uint32_t(a)) << 34) | (uint64_t(uint32_t(b)) << 4) | uint64_t(p);
  }
  static uint64_t bkey(int p, int a, int b) {
    return (uint64_t(p) << 58) | (uint64_t(uint32_t(a)) << 29) | uint64_t(uint32_t(b));
  }

  std::vector<Morph> mor_;
  std::vector<CellSet> cells_;
  std::shared_ptr<const Scheme> scheme_;
  std::unordered_map<CellSet, int, CellSetHash> by_cells_;
  std::unordered_map<uint64_t, int> comp_;
  std::unordered_map<uint64_t, std::vector<int>> bnd_, src_idx_;
  std::unordered_map<std::string, int> by_name_;
  std::vector<int> objects_, atoms_;
  int max_dim_ = 0;
  bool non_contracting_ = true;
  bool length_one_ = true;

  friend OmegaCategory free_closure(std::shared_ptr<const Scheme>, const BuildOptions&);
  friend OmegaCategory bilocalize(const OmegaCategory&, const std::vector<int>&,
                                  const std::vector<int>&);
};

// Closure of the atoms of a scheme under union composition.
OmegaCategory free_closure(std::shared_ptr<const Scheme> s, const BuildOptions& opt = {});

OmegaCategory build_In(int n, const BuildOptions& opt = {});
OmegaCategory build_oriental(int n, const BuildOptions& opt = {});
OmegaCategory build_free_category(const PrecubicalSet& k, const BuildOptions& opt = {});
// kind is "2_p" or "G_p".
OmegaCategory build_presented(const std::string& kind, int p);

OmegaCategory path_shift(const OmegaCategory& c);
OmegaCategory bilocalize(const OmegaCategory& c, const std::vector<int>& initial,
                         const std::vector<int>& final_states);

// The 1-category obtained from I^2 by identifying R(-0) with R(0-) and the
// two composites, with the 2-cell collapsed onto the common composite.
OmegaCategory build_thin_counterexample();

// Exhaustive check of globular and composition axioms; returns failures.
std::vector<std::string> check_globular_axioms(const OmegaCategory& c, std::size_t triple_cap);

}  // namespace corner
