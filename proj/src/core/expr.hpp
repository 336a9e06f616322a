#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/linform.hpp"

namespace entro {

// One parsed H(...)/I(...) occurrence with its signed rational coefficient.
// kind distinguishes H(J), H(J|L) and I(J;K|L); K is empty except for
// mutual-information terms, L may always be empty.  J and K may overlap.
enum class TermKind { joint_entropy, conditional_entropy, mutual_info };

struct EntropyTerm {
    Rat coefficient;
    TermKind kind;
    std::vector<std::string> j, k, l;
};

enum class Relation { ge, le, eq };

struct Inequality {
    std::vector<EntropyTerm> lhs;
    Relation rel = Relation::ge;
    std::vector<EntropyTerm> rhs;
};

// Grammar (whitespace insignificant):
//   ineq    := expr (">=" | "<=" | "=") expr
//   expr    := [sign] term { ("+"|"-") term }
//   term    := [rational "*"?] atom | zero-constant
//   atom    := "H(" varlist ["|" varlist] ")" | "I(" varlist ";" varlist ["|" varlist] ")"
//   varlist := ident { "," ident }
//   ident   := [A-Za-z][A-Za-z0-9_]*
//   rational:= integer ["/" positive-integer]
// A bare rational is accepted as a term only when its value is zero (so that
// the rendered tautology "0 >= 0" re-parses); nonzero constants are errors.
//
// Variable resolution: with no explicit context, an all-alphabetic identifier
// of length >= 2 denotes the juxtaposition of its letters (ITIP convention,
// e.g. "AB" = A,B), while identifiers containing digits or underscores stay
// atomic.  With an explicit context, an exact name match wins; otherwise the
// letterwise split is used when every letter is a context variable; otherwise
// the variable is unknown.
Inequality parse_inequality(const std::string& text,
                            const VarContext* ctx = nullptr);

// A bare expression (no relation), same term grammar and resolution.
std::vector<EntropyTerm> parse_expression(const std::string& text,
                                          const VarContext* ctx = nullptr);

// Union of the variables of resolved terms, sorted lexicographically.
VarContext inferred_context(const std::vector<EntropyTerm>& lhs,
                            const std::vector<EntropyTerm>& rhs = {});

// Expansion into canonical joint-entropy coordinates:
//   H(J|L)   -> H(JuL) - H(L)
//   I(J;K|L) -> H(JuL) + H(KuL) - H(JuKuL) - H(L)
// with H(emptyset) dropped and like terms merged.
LinForm canonicalize(const std::vector<EntropyTerm>& terms, const VarContext& ctx);

// Inequality normalized to ">= 0" form(s).  `primary` is lhs - rhs for ">="
// and "=", rhs - lhs for "<="; `secondary` holds the opposite direction for
// "=" and is empty otherwise.
struct CanonResult {
    VarContext ctx;
    Relation rel = Relation::ge;
    LinForm primary;
    std::optional<LinForm> secondary;
};

CanonResult canonicalize_inequality(const Inequality& ineq, const VarContext* ctx = nullptr);
CanonResult canonicalize_text(const std::string& text, const VarContext* ctx = nullptr);

// Deterministic textual form, e.g. "-1*H(C) + 1*H(A,C) + 1*H(B,C) - 1*H(A,B,C) >= 0":
// terms sorted by subset size then lexicographic variable order, rationals as
// "p/q", the empty form as "0 >= 0".  Output re-parses to the identical form.
std::string render(const LinForm& f);
// The expression part alone (no ">= 0"); "0" for the empty form.
std::string render_expression(const LinForm& f);

}  // namespace entro
