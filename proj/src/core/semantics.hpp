#pragma once

#include <random>
#include <string>
#include <vector>

#include "core/linform.hpp"

namespace entro {

// Finite joint probability table, dense in row-major order over the context's
// variable order (last variable fastest).  Used as a numeric falsification
// oracle; the symbolic core never consumes doubles.
struct JointPMF {
    VarContext ctx;
    std::vector<int> sizes;     // alphabet size per variable, each >= 1
    std::vector<double> table;  // product(sizes) cells

    std::size_t cell_index(const std::vector<int>& values) const;
    double probability(const std::vector<int>& values) const;
};

inline constexpr double kPmfSumTolerance = 1e-12;

// Throws PmfError on negative mass, size mismatch or total mass deviating
// from 1 by more than kPmfSumTolerance.
void validate_pmf(const JointPMF& p);

// Text format:
//   # comment
//   vars A:2 B:2 C:3
//   0 0 0 : 0.125
//   0 1 2 : 1/8
// The header names each variable with its alphabet size; every following line
// assigns one cell (values in [0, size)); omitted cells are zero;
// probabilities are decimals or fractions.
JointPMF parse_pmf(const std::string& text);
std::string render_pmf(const JointPMF& p);

// Entropies (bits, 0*log 0 = 0) of every nonempty marginal.
struct EntropyVector {
    VarContext ctx;
    std::vector<double> h;  // index subset-1
    double value(Mask subset) const { return h[subset - 1]; }
};

EntropyVector entropy_vector(const JointPMF& p);

// sum_J c_J * h(J) with the rational coefficients converted to double.
double evaluate(const LinForm& f, const EntropyVector& h);

// The copy construction: given a partition {a} u b u c of p's variables,
// build q(a_val, b_val, c_val, a') = p(a_val, b_val, c_val) * p(a'|b_val)
// over the original variables plus a fresh copy named `a + "_copy"`.  The
// output marginalizes back to p exactly, its (copy, b) marginal equals the
// (a, b) marginal, and I(copy; a,c | b) = 0.
JointPMF copy_distribution(const JointPMF& p, const std::string& a,
                           const std::vector<std::string>& b,
                           const std::vector<std::string>& c);

// Full-support random table: symmetric Dirichlet(1), i.e. normalized
// exponential weights per cell.
JointPMF random_pmf(std::mt19937_64& rng, const VarContext& ctx,
                    const std::vector<int>& sizes);

}  // namespace entro
