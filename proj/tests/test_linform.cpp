#include <doctest.h>

#include "core/errors.hpp"
#include "core/linform.hpp"

using namespace entro;

namespace {
const VarContext kAbc({"A", "B", "C"});
}

TEST_CASE("coefficients prune to zero and empty subsets are rejected") {
    LinForm f(kAbc);
    CHECK(f.coeff.empty());
    f.add_term(0b001, Rat(2));
    f.add_term(0b001, Rat(-2));
    CHECK(f.coeff.empty());
    CHECK(f.coefficient(0b001) == 0);

    CHECK_THROWS_AS(f.add_term(0, Rat(1)), Error);
    CHECK_THROWS_AS(f.add_term(0b1000, Rat(1)), Error);  // outside the context
}

TEST_CASE("arithmetic is term-wise with cancellation") {
    LinForm f(kAbc), g(kAbc);
    f.add_term(0b011, Rat(1));   // A,B
    f.add_term(0b100, Rat(-2));  // C
    g.add_term(0b011, Rat(-1));
    g.add_term(0b101, Rat(1, 2));  // A,C

    const LinForm sum = f + g;
    CHECK(sum.coefficient(0b011) == 0);
    CHECK(sum.coefficient(0b100) == -2);
    CHECK(sum.coefficient(0b101) == Rat(1, 2));

    const LinForm scaled = Rat(-2) * g;
    CHECK(scaled.coefficient(0b011) == 2);
    CHECK(scaled.coefficient(0b101) == -1);

    CHECK((Rat(0) * f).coeff.empty());
    CHECK((f - f).coeff.empty());
}

TEST_CASE("builders expand conditioning and drop the empty set") {
    // H(A|B) = H(A,B) - H(B)
    const LinForm he = cond_entropy(kAbc, 0b001, 0b010);
    CHECK(he.coefficient(0b011) == 1);
    CHECK(he.coefficient(0b010) == -1);
    CHECK(he.coeff.size() == 2);

    // H(A|{}) = H(A): no empty-set term appears
    const LinForm h = cond_entropy(kAbc, 0b001, 0);
    CHECK(h.coefficient(0b001) == 1);
    CHECK(h.coeff.size() == 1);

    // I(A;B) = H(A) + H(B) - H(A,B)
    const LinForm mi = mutual_info(kAbc, 0b001, 0b010, 0);
    CHECK(mi.coefficient(0b001) == 1);
    CHECK(mi.coefficient(0b010) == 1);
    CHECK(mi.coefficient(0b011) == -1);
    CHECK(mi.coeff.size() == 3);

    // Overlapping arguments: I(A,B;B|C) = H(A,B,C) + H(B,C) - H(A,B,C) - H(C)
    //                                   = H(B,C) - H(C)
    const LinForm overlap = mutual_info(kAbc, 0b011, 0b010, 0b100);
    CHECK(overlap.coefficient(0b110) == 1);
    CHECK(overlap.coefficient(0b100) == -1);
    CHECK(overlap.coeff.size() == 2);
}

TEST_CASE("coefficient_sum_over accumulates exactly the subsets containing v") {
    LinForm f(kAbc);
    f.add_term(0b001, Rat(1));  // A
    f.add_term(0b011, Rat(2));  // A,B
    f.add_term(0b110, Rat(5));  // B,C
    CHECK(coefficient_sum_over(f, "A") == 3);
    CHECK(coefficient_sum_over(f, "B") == 7);
    CHECK(coefficient_sum_over(f, "C") == 5);
    CHECK_THROWS_AS(coefficient_sum_over(f, "D"), UnknownVariableError);
}

TEST_CASE("embedding remaps subsets by variable name") {
    const VarContext small({"B", "D"});
    LinForm f(small);
    f.add_term(0b01, Rat(1));  // B
    f.add_term(0b11, Rat(3));  // B,D

    const VarContext big({"A", "B", "C", "D"});
    const LinForm g = embedded(f, big);
    CHECK(g.ctx == big);
    CHECK(g.coefficient(0b0010) == 1);   // B
    CHECK(g.coefficient(0b1010) == 3);   // B,D
    CHECK(g.coeff.size() == 2);

    // A context missing one of f's variables is rejected.
    CHECK_THROWS_AS(embedded(f, VarContext({"B", "C"})), UnknownVariableError);
}

TEST_CASE("lexical alignment sorts the variable order without changing meaning") {
    const VarContext scrambled({"C", "A", "B"});
    LinForm f(scrambled);
    f.add_term(0b011, Rat(1));  // {C,A}
    const LinForm g = aligned_lex(f);
    CHECK(g.ctx == kAbc);
    CHECK(g.coefficient(0b101) == 1);  // {A,C} in sorted order
    CHECK(g.coeff.size() == 1);
}
