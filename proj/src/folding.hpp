#pragma once

#include "nerve.hpp"

#include <string>
#include <vector>

namespace corner {

enum class MoveFamily { VPsi, HPsi, Theta };

struct Move {
  MoveFamily family = MoveFamily::VPsi;
  int sign = 0;  // 0 is -, 1 is +; theta is always -
  int i = 1;

  std::string str() const;  // e.g. "hpsi-_1", "theta-_2"
  bool operator==(const Move&) const = default;
};

// Negative folding of a morphism of dimension at most n into an n-cube.
SingularCube box_minus(const OmegaCategory& c, int u, int n);
// Usual folding operator.
SingularCube box_usual(const OmegaCategory& c, int u, int n);
// Phi_n^-(x) = box_minus(x(0_n), n); x must be branching.
SingularCube phi_minus(const OmegaCategory& c, const SingularCube& x);

SingularCube vpsi(const OmegaCategory& c, const SingularCube& x, int i, int sign);
SingularCube hpsi(const OmegaCategory& c, const SingularCube& x, int i, int sign);
SingularCube theta(const OmegaCategory& c, const SingularCube& x, int i);
SingularCube apply_move(const OmegaCategory& c, const SingularCube& x, const Move& m);

// Moves in application order whose composite is Phi_n^-.
std::vector<Move> fold_pipeline(int n);
// Number of leading moves of fold_pipeline(n) that form the psi prefix.
int psi_prefix_length(int n);

struct TraceStep {
  Move move;
  SingularCube result;
};

SingularCube apply_pipeline(const OmegaCategory& c, const std::vector<Move>& p, const SingularCube& x,
                            std::vector<TraceStep>* trace = nullptr);

// Face conditions characterizing folded cubes.
bool is_folded(const SingularCube& x);
// Fixed-point form: x == box_minus(x(0_n), n).
bool is_folded_fixed_point(const OmegaCategory& c, const SingularCube& x);

// Every positive face of the psi prefix applied to x is the constant cube on
// the final vertex of x.
bool aspiration_holds(const OmegaCategory& c, const SingularCube& x);

// Thin (n+1)-cubes witnessing that m(x) and x are T-equivalent.
std::vector<SingularCube> t_witness(const OmegaCategory& c, const SingularCube& x, const Move& m);
// z = Gamma_j^- x +_j eps_{j+1} y.
SingularCube plus_witness(const OmegaCategory& c, const SingularCube& x, const SingularCube& y, int j);
// B^n_{n-1}(x, y) for n-morphisms with t_{n-1}x = s_{n-1}y.
SingularCube composition_witness(const OmegaCategory& c, int x, int y);
// Listed faces of the 3-shell of the theta witness, in slot order. The
// witness itself takes its last positive face from the other seven.
std::vector<SingularCube> theta_shell(const OmegaCategory& c, const SingularCube& x);

// Commutation relations of the moves with faces and connections, the psi
// idempotence, commutation and braid laws, checked on the given cubes.
AxiomReport commutation_report(const OmegaCategory& c, const std::vector<SingularCube>& cubes);

// Folding checks: both is_folded routes agree, Phi is folded and idempotent,
// the pipeline equals Phi, aspiration, and the box_minus face identities.
AxiomReport folding_report(const OmegaCategory& c, const std::vector<SingularCube>& cubes, int n_max);

}  // namespace corner
