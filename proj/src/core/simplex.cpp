#include "core/simplex.hpp"

#include <cstddef>

#include "core/errors.hpp"

namespace entro {

ConeSolve solve_cone_membership(const std::vector<std::vector<Rat>>& gens,
                                const std::vector<Rat>& target) {
    const std::size_t m = target.size();   // rows (coordinates)
    const std::size_t k = gens.size();     // generator columns
    for (const auto& g : gens)
        if (g.size() != m)
            throw Error("generator dimension mismatch in cone membership solve");

    // Phase-one tableau for  sum_e lambda_e gens[e] = target, lambda >= 0:
    // minimize the sum of one artificial variable per row.  Rows are sign-
    // normalized so the right-hand side is nonnegative and the artificial
    // basis is feasible.  sigma records the normalization for the Farkas
    // translation at the end.
    std::vector<int> sigma(m, 1);
    std::vector<Rat> b(m);
    for (std::size_t i = 0; i < m; ++i) {
        sigma[i] = target[i] < 0 ? -1 : 1;
        b[i] = sigma[i] * target[i];
    }

    const std::size_t cols = k + m;  // generators then artificials
    std::vector<std::vector<Rat>> t(m, std::vector<Rat>(cols, Rat(0)));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t e = 0; e < k; ++e) t[i][e] = sigma[i] * gens[e][i];
        t[i][k + i] = 1;
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = k + i;

    // Reduced-cost row for the phase-one objective (artificial costs 1,
    // generator costs 0) relative to the all-artificial basis.
    std::vector<Rat> zrow(cols, Rat(0));
    for (std::size_t e = 0; e < k; ++e) {
        Rat colsum = 0;
        for (std::size_t i = 0; i < m; ++i) colsum += t[i][e];
        zrow[e] = -colsum;
    }
    // Artificial columns start basic with reduced cost 0 (1 - 1).

    while (true) {
        // Bland's rule: entering column = smallest index with negative
        // reduced cost; no cycling, so termination is guaranteed.
        std::size_t entering = cols;
        for (std::size_t j = 0; j < cols; ++j) {
            if (zrow[j] < 0) {
                entering = j;
                break;
            }
        }
        if (entering == cols) break;  // optimal

        // Ratio test, ties broken by smallest basis index (Bland).
        std::size_t pivot_row = m;
        Rat best_ratio = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][entering] <= 0) continue;
            Rat ratio = b[i] / t[i][entering];
            if (pivot_row == m || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[pivot_row])) {
                pivot_row = i;
                best_ratio = ratio;
            }
        }
        if (pivot_row == m)
            throw Error("phase-one objective unbounded; inconsistent tableau");

        // Pivot: normalize the row, eliminate the column elsewhere.
        const Rat pivot = t[pivot_row][entering];
        for (std::size_t j = 0; j < cols; ++j) t[pivot_row][j] /= pivot;
        b[pivot_row] /= pivot;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == pivot_row || t[i][entering] == 0) continue;
            const Rat factor = t[i][entering];
            for (std::size_t j = 0; j < cols; ++j)
                if (t[pivot_row][j] != 0) t[i][j] -= factor * t[pivot_row][j];
            b[i] -= factor * b[pivot_row];
        }
        if (zrow[entering] != 0) {
            const Rat factor = zrow[entering];
            for (std::size_t j = 0; j < cols; ++j)
                if (t[pivot_row][j] != 0) zrow[j] -= factor * t[pivot_row][j];
        }
        basis[pivot_row] = entering;
    }

    // Residual infeasibility = value of the artificials still in the basis.
    Rat infeasibility = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] >= k) infeasibility += b[i];

    ConeSolve out;
    if (infeasibility == 0) {
        out.member = true;
        out.combo.assign(k, Rat(0));
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] < k) out.combo[basis[i]] = b[i];
        return out;
    }

    // Infeasible: read the dual of each equality row off the artificial
    // reduced costs (cost 1, so y_i = 1 - zrow[artificial_i]) and undo the
    // sign normalization.  The result satisfies w . gens[e] >= 0 for all e
    // and w . target = -infeasibility < 0.
    out.member = false;
    out.witness.assign(m, Rat(0));
    for (std::size_t i = 0; i < m; ++i)
        out.witness[i] = -sigma[i] * (Rat(1) - zrow[k + i]);
    return out;
}

}  // namespace entro
