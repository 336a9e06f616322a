#pragma once

#include <string>
#include <vector>

#include "core/linform.hpp"

namespace entro {

// An inequality is balanced for a variable v when the coefficients of all
// subsets containing v sum to zero, and balanced outright when that holds for
// every context variable.
bool is_balanced_for(const LinForm& f, const std::string& v);
bool is_balanced(const LinForm& f);

struct BalanceInfo {
    LinForm form;
    // Variables whose residual weight r_v = coefficient_sum_over(f, v) was
    // negative.  A negative r_v certifies that the input was not a valid
    // information inequality; the transformation is still applied.
    std::vector<std::string> negative_r;
    // Number of coefficient-map reads/writes performed; stays O(support * n)
    // so balancing is linear in the length of the input.
    long steps = 0;
};

// The balancing transformation: f  ->  f - sum_v r_v * H(X_v | X_rest).
// The output is balanced for every variable; balanced inputs pass through
// unchanged, and the map is linear and idempotent.
BalanceInfo balance_full(const LinForm& f);
LinForm balance(const LinForm& f);
long balance_complexity_witness(const LinForm& f);

}  // namespace entro
