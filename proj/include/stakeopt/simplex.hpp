#pragma once

#include <vector>

#include "stakeopt/rational.hpp"

namespace stakeopt {

// Minimal exact-rational LP solver: maximize c'x subject to the given rows
// and x >= 0. Two-phase dense simplex with Bland's rule, so it terminates on
// degenerate inputs and certifies feasibility exactly — no tolerances
// anywhere. Sized for the small realizability programs this project builds
// (tens of variables, up to a few hundred rows).
enum class Sense { le, ge, eq };

struct LpConstraint {
    std::vector<Rational> coeffs;  // length = number of structural variables
    Sense sense;
    Rational rhs;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
    LpStatus status;
    Rational objective;        // valid when optimal
    std::vector<Rational> x;   // valid when optimal
};

LpResult maximize(const std::vector<Rational>& objective,
                  const std::vector<LpConstraint>& constraints);

}  // namespace stakeopt
