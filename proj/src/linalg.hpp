#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace corner {

using Integer = boost::multiprecision::cpp_int;

// Sparse integer vector: strictly increasing indices, no explicit zeros.
struct SVec {
  std::vector<std::pair<int, Integer>> e;

  bool empty() const { return e.empty(); }
  std::size_t size() const { return e.size(); }
  Integer get(int i) const;
  void add(int i, const Integer& v);  // unordered insert-or-accumulate
  void normalize();                   // sort, merge duplicates, drop zeros
  static SVec axpy(const SVec& y, const Integer& a, const SVec& x);  // y + a*x
  bool operator==(const SVec& o) const { return e == o.e; }
};

struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<SVec> col;

  SparseMatrix() = default;
  SparseMatrix(int r, int c) : rows(r), cols(c), col(c) {}
  SVec apply(const SVec& v) const;  // M * v
  bool is_zero() const;
};

struct DenseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Integer> a;

  DenseMatrix() = default;
  DenseMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
  Integer& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const Integer& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
  static DenseMatrix identity(int n);
  DenseMatrix operator*(const DenseMatrix& o) const;
  bool operator==(const DenseMatrix& o) const = default;
};

struct SmithForm {
  DenseMatrix U, D, V;  // U * M * V = D
};

// Full Smith normal form with unimodular transforms.
SmithForm smith_normal_form(const DenseMatrix& m);

// Nonzero invariant factors (positive, divisibility chain) of a sparse matrix.
std::vector<Integer> invariant_factors(const SparseMatrix& m);

// Lattice spanned by sparse generators in Z^dim. Unit pivots are eliminated
// sparsely; whatever remains is brought to echelon form densely.
class LatticeReducer {
 public:
  explicit LatticeReducer(int dim, bool track = false) : dim_(dim), track_(track) {}

  void add(const SVec& g);
  void finalize();

  // Residue of v after removing every lattice component that can be removed;
  // zero iff v lies in the lattice.
  SVec reduce(const SVec& v, SVec* certificate = nullptr) const;
  bool contains(const SVec& v) const { return reduce(v).empty(); }

  // Basis of the lattice in ambient coordinates (pivot rows then echelon rows).
  std::vector<SVec> basis() const;
  // Coordinates of a lattice vector in basis(); nullopt if not in the lattice.
  std::optional<SVec> coordinates(const SVec& v) const;

  int unit_pivot_count() const { return static_cast<int>(pivot_rows_.size()); }
  int residual_count() const { return static_cast<int>(echelon_.size()); }
  bool pivot(int coord) const { return pivot_of_[coord] >= 0; }
  int dim() const { return dim_; }

 private:
  struct Row {
    SVec v;
    SVec combo;  // combination of input generators (when tracking)
    int lead = -1;
  };
  SVec reduce_units(const SVec& v, SVec* cert) const;
  void absorb(Row r);

  int dim_;
  bool track_;
  bool finalized_ = false;
  std::vector<Row> pending_;
  std::vector<Row> pivot_rows_;     // coefficient 1 at lead, no other pivot coordinate
  std::vector<int> pivot_of_;       // coordinate -> pivot row index or -1
  std::vector<std::vector<int>> occurs_;  // coordinate -> pivot rows that mention it
  std::vector<Row> echelon_;        // strictly increasing leads, positive lead coefficient
  int generator_count_ = 0;
};

}  // namespace corner
