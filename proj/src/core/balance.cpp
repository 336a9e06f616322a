#include "core/balance.hpp"

namespace entro {

bool is_balanced_for(const LinForm& f, const std::string& v) {
    return coefficient_sum_over(f, v) == 0;
}

bool is_balanced(const LinForm& f) {
    // One sweep over the support accumulates every r_v at once.
    std::vector<Rat> r(f.ctx.size(), Rat(0));
    for (const auto& [subset, c] : f.coeff)
        for (int i = 0; i < f.ctx.size(); ++i)
            if (subset & (Mask(1) << i)) r[i] += c;
    for (const Rat& value : r)
        if (value != 0) return false;
    return true;
}

BalanceInfo balance_full(const LinForm& f) {
    BalanceInfo info;
    info.form = f;
    const int n = f.ctx.size();
    if (n == 0) return info;
    const Mask full = f.ctx.full_mask();

    // r_v = sum of coefficients of subsets containing v, all computed in a
    // single pass over the support (one map read per stored term).
    std::vector<Rat> r(n, Rat(0));
    for (const auto& [subset, c] : f.coeff) {
        ++info.steps;
        for (int i = 0; i < n; ++i)
            if (subset & (Mask(1) << i)) r[i] += c;
    }

    // Subtract r_v * H(X_v | X_rest) = r_v * (H(full) - H(full - v)) per
    // variable: at most two map updates each, so the whole transformation
    // touches O(|support| + n) entries.
    for (int i = 0; i < n; ++i) {
        if (r[i] == 0) continue;
        if (r[i] < 0) info.negative_r.push_back(f.ctx.names[i]);
        info.form.add_term(full, -r[i]);
        info.steps += 2;  // read-modify-write
        const Mask rest = full & ~(Mask(1) << i);
        if (rest) {  // for n = 1, H(X_v|X_rest) is just H(X_v)
            info.form.add_term(rest, r[i]);
            info.steps += 2;
        }
    }
    return info;
}

LinForm balance(const LinForm& f) {
    return balance_full(f).form;
}

long balance_complexity_witness(const LinForm& f) {
    return balance_full(f).steps;
}

}  // namespace entro
