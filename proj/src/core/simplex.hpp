#pragma once

#include <vector>

#include "core/rational.hpp"

namespace entro {

// Exact cone-membership solver: decide whether `target` is a nonnegative
// combination of the generator columns, i.e. whether
//     sum_e lambda_e * gens[e] = target,  lambda >= 0
// is feasible.  On success `combo[e]` holds one such lambda; on failure
// `witness` is a Farkas separator w with  w . gens[e] >= 0 for every e and
// w . target < 0, proving non-membership.
struct ConeSolve {
    bool member = false;
    std::vector<Rat> combo;
    std::vector<Rat> witness;
};

// gens[e] and target are dense vectors of one common dimension.  Solved by
// phase-one primal simplex over exact rationals with Bland's pivoting rule
// (termination guaranteed, no tolerance anywhere).
ConeSolve solve_cone_membership(const std::vector<std::vector<Rat>>& gens,
                                const std::vector<Rat>& target);

}  // namespace entro
