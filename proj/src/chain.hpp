#pragma once

#include "linalg.hpp"

#include <string>
#include <vector>

namespace corner {

// Free chain complex: basis labels per degree and d[n] : C_n -> C_{n-1}.
struct ChainComplex {
  std::vector<std::vector<std::string>> basis;
  std::vector<SparseMatrix> d;

  int top() const { return static_cast<int>(basis.size()) - 1; }
  int rank(int n) const {
    return n >= 0 && n <= top() ? static_cast<int>(basis[n].size()) : 0;
  }
  void check_square_zero() const;  // throws IllFormedComplex
};

// Quotient of a free complex by relator vectors per degree.
struct QuotientComplex {
  ChainComplex cx;
  std::vector<std::vector<SVec>> relators;
};

struct HomologyGroup {
  int degree = 0;
  long betti = 0;
  std::vector<Integer> torsion;
  bool operator==(const HomologyGroup&) const = default;
};

struct HomologySummary {
  std::vector<HomologyGroup> groups;
  bool operator==(const HomologySummary&) const = default;
  const HomologyGroup& at(int n) const { return groups.at(n); }
  bool trivial(int n) const { return groups.at(n).betti == 0 && groups.at(n).torsion.empty(); }
  std::string describe(int n) const;  // "Z^2 + Z/2" style
};

HomologySummary complex_homology(const ChainComplex& c, int up_to);
HomologySummary complex_homology(const QuotientComplex& q, int up_to);

}  // namespace corner
