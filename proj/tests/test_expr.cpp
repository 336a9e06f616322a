#include <doctest.h>

#include <random>

#include "core/errors.hpp"
#include "core/expr.hpp"

using namespace entro;

namespace {

LinForm canon(const std::string& text, const VarContext* ctx = nullptr) {
    return canonicalize_text(text, ctx).primary;
}

}  // namespace

TEST_CASE("a conditional mutual information expands to four joint entropies") {
    const LinForm f = canon("I(A;B|C) >= 0");
    CHECK(f.ctx == VarContext({"A", "B", "C"}));
    CHECK(f.coefficient(0b101) == 1);   // A,C
    CHECK(f.coefficient(0b110) == 1);   // B,C
    CHECK(f.coefficient(0b111) == -1);  // A,B,C
    CHECK(f.coefficient(0b100) == -1);  // C
    CHECK(f.coeff.size() == 4);
}

TEST_CASE("<= moves everything to the right-hand side") {
    const LinForm f = canon("H(A) <= H(A,B)");
    CHECK(f.coefficient(0b01) == -1);
    CHECK(f.coefficient(0b11) == 1);
}

TEST_CASE("equalities canonicalize to both directions") {
    const CanonResult r = canonicalize_text("H(A) = H(B)");
    REQUIRE(r.secondary.has_value());
    CHECK(r.primary.coefficient(0b01) == 1);
    CHECK(r.primary.coefficient(0b10) == -1);
    CHECK(r.secondary->coefficient(0b01) == -1);
    CHECK(r.secondary->coefficient(0b10) == 1);
    CHECK(!canonicalize_text("H(A) >= 0").secondary.has_value());
}

TEST_CASE("coefficients parse as exact rationals, with or without '*'") {
    const LinForm f = canon("2/3*H(A) + 1/3 H(B) - H(A,B) >= 0");
    CHECK(f.coefficient(0b01) == Rat(2, 3));
    CHECK(f.coefficient(0b10) == Rat(1, 3));
    CHECK(f.coefficient(0b11) == -1);

    // A count glued to the atom, as in "3I(...)".
    const LinForm g = canon("3I(A;B) >= 0");
    CHECK(g.coefficient(0b01) == 3);
}

TEST_CASE("juxtaposed capital letters split when no context is given") {
    const LinForm f = canon("H(AB) >= 0");
    CHECK(f.ctx == VarContext({"A", "B"}));
    CHECK(f.coefficient(0b11) == 1);

    // An explicit context with a literal "AB" variable wins over splitting.
    const VarContext weird({"AB", "C"});
    const LinForm g = canon("H(AB) >= 0", &weird);
    CHECK(g.ctx == weird);
    CHECK(g.coefficient(0b01) == 1);

    // Multi-letter names that are not in the context and not all splittable
    // are unknown-variable errors, not silent splits.
    const VarContext ab({"A", "B"});
    CHECK_THROWS_AS(canon("H(AQZ) >= 0", &ab), UnknownVariableError);
}

TEST_CASE("variable lists deduplicate while preserving first occurrence") {
    const LinForm f = canon("H(A,A,B) - H(A,B) >= 0");
    CHECK(f.coeff.empty());
}

TEST_CASE("the inferred context is the sorted union of mentioned names") {
    const LinForm f = canon("H(D) + H(B) - H(B,D) >= 0");
    CHECK(f.ctx == VarContext({"B", "D"}));
}

TEST_CASE("rendering sorts subsets by size then lexicographically") {
    LinForm f(VarContext({"A", "B", "C"}));
    f.add_term(0b101, Rat(1));  // A,C
    f.add_term(0b100, Rat(1));  // C
    f.add_term(0b010, Rat(-1));  // B
    CHECK(render(f) == "-1*H(B) + 1*H(C) + 1*H(A,C) >= 0");
}

TEST_CASE("the empty form renders as the tautology and re-parses") {
    const LinForm zero = canon("0 >= 0");
    CHECK(zero.coeff.empty());
    CHECK(render(zero) == "0 >= 0");
    CHECK(canon(render(zero)).coeff.empty());
}

TEST_CASE("nonzero constants are rejected") {
    CHECK_THROWS_AS(canon("H(A) >= 1"), ParseError);
    CHECK_THROWS_AS(canon("H(A) + 2 >= 0"), ParseError);
}

TEST_CASE("parse errors carry a position into the input") {
    try {
        canon("H(A");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position >= 2);
    }
    CHECK_THROWS_AS(canon("H(A) >= 0 trailing"), ParseError);
    CHECK_THROWS_AS(canon("H() >= 0"), ParseError);
    CHECK_THROWS_AS(canon("H(A) >= 0 >= 0"), ParseError);
    CHECK_THROWS_AS(canon("1/0*H(A) >= 0"), ParseError);
}

TEST_CASE("render/parse is a fixed point on random forms") {
    const VarContext ctx({"A", "B", "C", "D"});
    std::mt19937_64 rng(20240816);
    std::uniform_int_distribution<int> mask_dist(1, 15);
    std::uniform_int_distribution<int> num_dist(-6, 6);
    std::uniform_int_distribution<int> den_dist(1, 4);
    for (int trial = 0; trial < 200; ++trial) {
        LinForm f(ctx);
        for (int t = 0; t < 5; ++t)
            f.add_term(Mask(mask_dist(rng)), Rat(num_dist(rng), den_dist(rng)));
        const LinForm back = canon(render(f), &ctx);
        CHECK(back.coeff == f.coeff);
    }
}
