#pragma once

#include "chain.hpp"
#include "nerve.hpp"
#include "precub.hpp"

#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace corner {

enum class Theory { Branching, Merging, ReducedBranching, Formal, GoubaultMinus, GoubaultPlus };

const char* theory_name(Theory t);
Theory parse_theory(const std::string& s);  // throws BadArgument

// Branching (side 0) or merging (side 1) cubes of C up to degree `top`. The
// top degree may be restricted to thin cubes.
class CornerNerve {
 public:
  CornerNerve(const OmegaCategory& c, int side, int top, bool thin_top = false,
              std::size_t budget = 2000000);

  const OmegaCategory& category() const { return *c_; }
  int side() const { return side_; }
  int top() const { return static_cast<int>(cubes_.size()) - 1; }
  const std::vector<SingularCube>& cubes(int n) const { return cubes_.at(n); }
  int find(const SingularCube& x) const;  // -1 when absent
  std::string label(const SingularCube& x) const;

  // sum_i (-1)^{i+1} face_i^side(x) in the basis of degree n-1.
  SVec boundary(const SingularCube& x) const;

 private:
  const OmegaCategory* c_;
  int side_;
  std::vector<std::vector<SingularCube>> cubes_;
  std::vector<std::unordered_map<SingularCube, int, SingularCubeHash>> index_;
};

ChainComplex corner_complex(const CornerNerve& nv, int up_to);
ChainComplex corner_complex(const OmegaCategory& c, int side, int up_to);
// Relators: thin branching cubes and the boundaries of thin cubes one degree up.
QuotientComplex reduced_corner_complex(const CornerNerve& nv, int up_to);
QuotientComplex reduced_corner_complex(const OmegaCategory& c, int up_to);
QuotientComplex formal_complex(const OmegaCategory& c, int up_to);

// Homology of any theory; precubical input is required for the Goubault ones.
HomologySummary compute_homology(Theory t, const OmegaCategory* c, const PrecubicalSet* k, int up_to);

std::string homology_json(Theory t, const HomologySummary& h);
std::string homology_table(Theory t, const HomologySummary& h);

// Integer chains of cubes.
using CubeChain = std::vector<std::pair<SingularCube, Integer>>;

struct TCertificate {
  bool equivalent = false;
  // Coefficients of thin cubes (degree n) and of boundaries of thin cubes
  // (degree n+1) whose sum is x - y.
  std::vector<std::pair<std::string, Integer>> thin;
  std::vector<std::pair<std::string, Integer>> thin_boundaries;
};

// Decides x - y in M_n + d M_{n+1} for chains of branching n-cubes.
class ThinSolver {
 public:
  ThinSolver(const CornerNerve& nv, int n);

  int degree() const { return n_; }
  // Vector of a chain; thin cubes outside the branching basis count as zero.
  SVec vector(const CubeChain& x) const;
  TCertificate solve(const SVec& diff) const;
  TCertificate equivalent(const CubeChain& x, const CubeChain& y) const;
  // Membership of diff in the boundaries plus the connection-degenerate cubes;
  // needs the full nerve one degree up.
  bool normalized_boundary(const SVec& diff) const;

 private:
  const CornerNerve& nv_;
  int n_;
  std::vector<std::string> gen_label_;
  std::vector<int> gen_kind_;  // 0 thin cube, 1 boundary of a thin cube
  std::unique_ptr<LatticeReducer> lattice_;
  mutable std::unique_ptr<LatticeReducer> normalized_;
  mutable std::once_flag normalized_once_;
};

TCertificate t_equivalent(const OmegaCategory& c, const CubeChain& x, const CubeChain& y, int n);

struct CalculRow {
  int n = 0;
  HomologyGroup corner;  // H_{n+1}^-(C)
  HomologyGroup path;    // H_n(PC)
  bool match = false;
};

struct CalculReport {
  std::vector<CalculRow> rows;
  bool ok() const;
};

// Compares H_{n+1}^-(C) with the simplicial homology of the nerve of PC.
CalculReport calcul_crosscheck(const OmegaCategory& c, int up_to);

// Simplicial nerve of a category: functors from the n-th oriental, as the
// image of every cell of the oriental (cells in oriental_scheme order).
std::vector<std::vector<int>> enumerate_simplices(const OmegaCategory& c, int n,
                                                  std::size_t budget = 2000000);
ChainComplex simplicial_complex(const OmegaCategory& c, int up_to);

struct DiffReport {
  long checked = 0;
  long failed = 0;
  std::string example;
  bool ok() const { return failed == 0; }
};

DiffReport diff_formula_check(const OmegaCategory& c, int n);

}  // namespace corner
