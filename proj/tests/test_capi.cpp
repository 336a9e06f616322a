// Exercises the shared-library surface exactly as an external client would:
// through entroprover.h alone, never touching the core headers.
#include <doctest.h>

#include <cstring>
#include <string>

#include "entroprover.h"

namespace {

struct FormGuard {
    ep_form* f = nullptr;
    ~FormGuard() { ep_form_free(f); }
};
struct PmfGuard {
    ep_pmf* p = nullptr;
    ~PmfGuard() { ep_pmf_free(p); }
};

std::string take(char* s) {
    std::string out = s ? s : "";
    ep_string_free(s);
    return out;
}

std::string render(const ep_form* f) {
    char* s = nullptr;
    REQUIRE(ep_form_render(f, &s) == EP_OK);
    return take(s);
}

}  // namespace

TEST_CASE("parse, render, and arity round-trip through the handle") {
    FormGuard g;
    REQUIRE(ep_form_parse("I(A;B|C) >= 0", nullptr, &g.f, nullptr) == EP_OK);
    CHECK(render(g.f) ==
          "-1*H(C) + 1*H(A,C) + 1*H(B,C) - 1*H(A,B,C) >= 0");
    int arity = 0;
    REQUIRE(ep_form_arity(g.f, &arity) == EP_OK);
    CHECK(arity == 3);

    // The rendered text re-parses to the same canonical render.
    FormGuard again;
    REQUIRE(ep_form_parse(render(g.f).c_str(), nullptr, &again.f, nullptr) == EP_OK);
    CHECK(render(again.f) == render(g.f));
}

TEST_CASE("an explicit context changes name resolution") {
    FormGuard g;
    REQUIRE(ep_form_parse("H(AB) >= 0", "AB,C", &g.f, nullptr) == EP_OK);
    int arity = 0;
    REQUIRE(ep_form_arity(g.f, &arity) == EP_OK);
    CHECK(arity == 2);
    CHECK(render(g.f) == "1*H(AB) >= 0");
}

TEST_CASE("equalities require the secondary out-parameter") {
    FormGuard a, b;
    REQUIRE(ep_form_parse("H(A) = H(B)", nullptr, &a.f, &b.f) == EP_OK);
    REQUIRE(b.f != nullptr);
    CHECK(render(a.f) == "1*H(A) - 1*H(B) >= 0");
    CHECK(render(b.f) == "-1*H(A) + 1*H(B) >= 0");

    FormGuard c;
    CHECK(ep_form_parse("H(A) = H(B)", nullptr, &c.f, nullptr) == EP_ERR_PARSE);
    CHECK(std::strlen(ep_last_error()) > 0);
}

TEST_CASE("balancing reports the transformed form and negative weights") {
    FormGuard g, balanced;
    REQUIRE(ep_form_parse("H(B,C) >= 0", "A,B,C", &g.f, nullptr) == EP_OK);
    char* negative = nullptr;
    REQUIRE(ep_form_balance(g.f, &balanced.f, &negative) == EP_OK);
    CHECK(take(negative).empty());
    int is_balanced = 0;
    REQUIRE(ep_form_is_balanced(balanced.f, nullptr, &is_balanced) == EP_OK);
    CHECK(is_balanced == 1);

    FormGuard neg, neg_out;
    REQUIRE(ep_form_parse("0 >= H(A)", nullptr, &neg.f, nullptr) == EP_OK);
    char* names = nullptr;
    REQUIRE(ep_form_balance(neg.f, &neg_out.f, &names) == EP_OK);
    CHECK(take(names) == "A");
}

TEST_CASE("per-variable balance queries go through the same entry point") {
    FormGuard g;
    REQUIRE(ep_form_parse("H(A) - H(A,B) >= 0", nullptr, &g.f, nullptr) == EP_OK);
    int flag = -1;
    REQUIRE(ep_form_is_balanced(g.f, "A", &flag) == EP_OK);
    CHECK(flag == 1);
    REQUIRE(ep_form_is_balanced(g.f, "B", &flag) == EP_OK);
    CHECK(flag == 0);
    CHECK(ep_form_is_balanced(g.f, "Q", &flag) == EP_ERR_VARIABLE);
}

TEST_CASE("membership checks return verdict and report in both formats") {
    FormGuard g;
    REQUIRE(ep_form_parse("I(A;B) >= 0", nullptr, &g.f, nullptr) == EP_OK);
    int is = 0;
    char* report = nullptr;
    REQUIRE(ep_form_check(g.f, 0, &is, &report) == EP_OK);
    CHECK(is == 1);
    CHECK(take(report).find("shannon-type") == 0);

    REQUIRE(ep_form_check(g.f, 1, &is, &report) == EP_OK);
    const std::string json = take(report);
    CHECK(json.find("\"verdict\"") != std::string::npos);

    FormGuard bad;
    REQUIRE(ep_form_parse("H(A) >= H(A,B)", nullptr, &bad.f, nullptr) == EP_OK);
    REQUIRE(ep_form_check(bad.f, 0, &is, &report) == EP_OK);
    CHECK(is == 0);
    CHECK(take(report).find("not-shannon-type") == 0);
}

TEST_CASE("the derivation pipeline works over the C boundary") {
    FormGuard premise;
    REQUIRE(ep_form_parse(
                "I(C;D) <= I(C;D|A) + I(C;D|B) + I(A;B) + I(C;D|Z) + I(Z;C|D)"
                " + I(Z;D|C) + 3 I(Z;A,B|C,D)",
                nullptr, &premise.f, nullptr) == EP_OK);

    FormGuard q;
    REQUIRE(ep_form_zy(premise.f, "Z", "A,B", "C,D", &q.f) == EP_OK);
    FormGuard t4;
    REQUIRE(ep_form_subst(q.f, "Z", "A", &t4.f) == EP_OK);

    FormGuard expected;
    REQUIRE(ep_form_parse(
                "I(C;D) <= 2I(C;D|A) + I(C;D|B) + I(A;B) + I(A;C|D) + I(A;D|C)",
                nullptr, &expected.f, nullptr) == EP_OK);
    CHECK(render(t4.f) == render(expected.f));

    int is = 1;
    char* report = nullptr;
    REQUIRE(ep_form_check(t4.f, 0, &is, &report) == EP_OK);
    take(report);
    CHECK(is == 0);

    // The conditional-entropy rule rejects the mixed premise shape.
    FormGuard mixed, out;
    REQUIRE(ep_form_parse("I(Z;A|B) >= 0", nullptr, &mixed.f, nullptr) == EP_OK);
    CHECK(ep_form_mmrv(mixed.f, "Z", "A", "B", &out.f) == EP_ERR_SHAPE);
}

TEST_CASE("distributions parse, evaluate, render, and extend with copies") {
    PmfGuard p;
    REQUIRE(ep_pmf_parse("vars A:2 B:2\n0 0 : 1/2\n1 1 : 1/2\n", &p.p) == EP_OK);

    FormGuard mi;
    REQUIRE(ep_form_parse("I(A;B) >= 0", nullptr, &mi.f, nullptr) == EP_OK);
    double value = 0.0;
    REQUIRE(ep_form_eval(mi.f, p.p, &value) == EP_OK);
    CHECK(value == doctest::Approx(1.0));

    PmfGuard q;
    REQUIRE(ep_pmf_copy_var(p.p, "A", "B", nullptr, &q.p) == EP_OK);
    char* text = nullptr;
    REQUIRE(ep_pmf_render(q.p, &text) == EP_OK);
    CHECK(take(text).find("A_copy:2") != std::string::npos);

    PmfGuard bad;
    CHECK(ep_pmf_parse("vars A:2\n0 : 0.4\n1 : 0.4\n", &bad.p) == EP_ERR_PMF);
}

TEST_CASE("scripts run to a verdict or report script errors") {
    int outcome = -1;
    char* transcript = nullptr;
    REQUIRE(ep_run_script("let f = H(A) >= 0\nassert shannon f\n", 0, &outcome,
                          &transcript) == EP_OK);
    CHECK(outcome == 0);
    CHECK(take(transcript).find("RESULT: PASS") != std::string::npos);

    REQUIRE(ep_run_script("let f = H(A) <= 0\nassert shannon f\n", 0, &outcome,
                          &transcript) == EP_OK);
    CHECK(outcome == 1);
    CHECK(take(transcript).find("RESULT: FAIL") != std::string::npos);

    CHECK(ep_run_script("let f =\n", 0, &outcome, &transcript) == EP_ERR_SCRIPT);
}

TEST_CASE("elemental listings come in text and structured form") {
    char* text = nullptr;
    REQUIRE(ep_elementals(2, 0, &text) == EP_OK);
    const std::string listing = take(text);
    CHECK(listing.find("I(A;B)") != std::string::npos);

    REQUIRE(ep_elementals(3, 1, &text) == EP_OK);
    CHECK(take(text).find("\"description\"") != std::string::npos);

    CHECK(ep_elementals(0, 0, &text) == EP_ERR_LIMIT);
    CHECK(ep_elementals(99, 0, &text) == EP_ERR_LIMIT);
}

TEST_CASE("error codes distinguish the failure families") {
    FormGuard g;
    CHECK(ep_form_parse("H(A", nullptr, &g.f, nullptr) == EP_ERR_PARSE);
    CHECK(ep_form_parse("H(Q) >= 0", "A,B", &g.f, nullptr) == EP_ERR_VARIABLE);
    CHECK(ep_form_parse(nullptr, nullptr, &g.f, nullptr) == EP_ERR_INVALID);
    CHECK(ep_form_render(nullptr, nullptr) == EP_ERR_INVALID);

    // Messages accompany every failure.
    CHECK(ep_form_parse("H(A", nullptr, &g.f, nullptr) == EP_ERR_PARSE);
    CHECK(std::strlen(ep_last_error()) > 0);

    CHECK(ep_max_n() == 8);
}
