#pragma once

#include "chain.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace corner {

// A finite precubical set. Cubes are kept sorted by (dim, id); faces are
// stored as cube indices, slot 2*(i-1) for sign - and 2*(i-1)+1 for sign +.
class PrecubicalSet {
 public:
  struct Cube {
    std::string id;
    int dim = 0;
    std::vector<int> faces;
  };

  struct RawCube {
    std::string id;
    int dim = 0;
    std::vector<std::string> faces;  // same slot layout, by id
  };

  // Resolves ids; throws DanglingFace / DimensionMismatch / Syntax.
  static PrecubicalSet from_raw(std::vector<RawCube> raw);

  int size() const { return static_cast<int>(cubes_.size()); }
  const Cube& cube(int c) const { return cubes_[c]; }
  const std::vector<Cube>& cubes() const { return cubes_; }
  int find(const std::string& id) const;  // -1 when absent
  int max_dim() const;
  std::vector<int> of_dim(int n) const;

  // face(c, i, sign) with 1-based i and sign 0 for -, 1 for +.
  int face(int c, int i, int sign) const { return cubes_[c].faces[2 * (i - 1) + sign]; }

 private:
  std::vector<Cube> cubes_;
  std::unordered_map<std::string, int> index_;
};

struct Violation {
  std::string rule;  // FaceDimension | CubeAxiom | Acyclicity
  std::string cube;
  std::vector<int> indices;
  std::string message;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

PrecubicalSet parse_precubical(const std::string& text);
std::string serialize_precubical(const PrecubicalSet& k);
ValidationReport validate(const PrecubicalSet& k);

// (Z K_*, d^side) with d^side = sum_i (-1)^{i+1} face_i^side; side 0 is -, 1 is +.
ChainComplex goubault_complex(const PrecubicalSet& k, int side);

// Standard n-cube: one cube per word over {-,0,+} of length n, id = the word.
PrecubicalSet standard_cube(int n);

}  // namespace corner
