#pragma once

#include <map>
#include <string>

#include "core/context.hpp"
#include "core/rational.hpp"

namespace entro {

// A linear form over joint entropies: the sparse map {J -> c_J} represents
// the inequality  sum_J c_J * H(X_J) >= 0  over nonempty subsets J of the
// context.  Zero coefficients are never stored, so two forms over the same
// context are equal iff their maps are identical (canonical representation).
// The empty map is the tautology 0 >= 0.
struct LinForm {
    VarContext ctx;
    std::map<Mask, Rat> coeff;

    LinForm() = default;
    explicit LinForm(VarContext c) : ctx(std::move(c)) {}

    Rat coefficient(Mask subset) const;
    // coeff[subset] += value, erasing the entry when it cancels to zero.
    // subset must be nonempty and within ctx.
    void add_term(Mask subset, const Rat& value);

    bool is_zero() const { return coeff.empty(); }
    int support_size() const { return static_cast<int>(coeff.size()); }

    bool operator==(const LinForm&) const = default;
};

// Coefficient-wise sum; throws ContextMismatchError unless a.ctx == b.ctx.
LinForm add(const LinForm& a, const LinForm& b);
// Every coefficient multiplied by k (empty form when k = 0).
LinForm scale(const LinForm& a, const Rat& k);
// r_v: the sum of c_J over subsets J containing v.  Throws
// UnknownVariableError when v is not in the context.
Rat coefficient_sum_over(const LinForm& a, const std::string& v);

inline LinForm operator+(const LinForm& a, const LinForm& b) { return add(a, b); }
LinForm operator-(const LinForm& a, const LinForm& b);
inline LinForm operator*(const Rat& k, const LinForm& a) { return scale(a, k); }

// Canonical single-term and derived-quantity builders (H(emptyset) = 0 is
// dropped throughout, so e.g. cond_entropy(J, 0) has a single +H(J) term).
LinForm entropy_of(const VarContext& ctx, Mask j);                     // H(J)
LinForm cond_entropy(const VarContext& ctx, Mask j, Mask l);           // H(J|L)
LinForm mutual_info(const VarContext& ctx, Mask j, Mask k, Mask l);    // I(J;K|L)

// Same coefficients over a larger context (every name of f.ctx must exist in
// `super`); used to combine forms built over different variable subsets.
LinForm embedded(const LinForm& f, const VarContext& super);

// Same form with the context reordered lexicographically; used to compare
// forms whose contexts list the same names in different orders.
LinForm aligned_lex(const LinForm& f);

}  // namespace entro
