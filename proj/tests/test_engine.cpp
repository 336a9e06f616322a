#include <doctest.h>

#include <random>

#include "core/balance.hpp"
#include "core/engine.hpp"
#include "core/errors.hpp"
#include "core/expr.hpp"
#include "core/semantics.hpp"
#include "core/shannon.hpp"

using namespace entro;

namespace {

const char* kPremiseZy =
    "I(C;D) <= I(C;D|A) + I(C;D|B) + I(A;B) + I(C;D|Z) + I(Z;C|D) + I(Z;D|C)"
    " + 3 I(Z;A,B|C,D)";
const char* kPremiseMmrv =
    "H(Z) <= I(C;D|A) + I(C;D|B) + I(A;B) + 2 H(Z|C) + 2 H(Z|D)";

LinForm canon(const std::string& text) {
    return canonicalize_text(text).primary;
}

// A Shannon-type form is a conic combination of pool elementals; reuse its
// certificate as a pick combination.
std::vector<std::pair<std::string, Rat>> combo_from_certificate(const LinForm& f) {
    const ShannonVerdict v = check_shannon(f);
    REQUIRE(v.is_shannon);
    const auto elems = elementals(f.ctx);
    std::vector<std::pair<std::string, Rat>> combo;
    for (const auto& [id, lambda] : v.certificate)
        combo.emplace_back(elems[id].description, lambda);
    return combo;
}

}  // namespace

TEST_CASE("pools seed with the elemental inequalities") {
    CHECK(init_pool(VarContext({"A"})).entries.size() == 1);
    CHECK(init_pool(VarContext({"A", "B"})).entries.size() == 3);
    const Pool p3 = init_pool(VarContext({"A", "B", "C"}));
    CHECK(p3.entries.size() == 9);
    CHECK(p3.has("I(A;B|C)"));
    CHECK(p3.at("H(A|B,C)").prov == Provenance::elemental);
}

TEST_CASE("picking is an exact conic combination with input validation") {
    const Pool pool = init_pool(VarContext({"A", "B"}));
    const LinForm one = pick(pool, {{"I(A;B)", Rat(1)}});
    CHECK(one.coeff == pool.at("I(A;B)").form.coeff);

    const LinForm mix = pick(pool, {{"H(A|B)", Rat(2)}, {"I(A;B)", Rat(1, 2)}});
    const LinForm expected =
        Rat(2) * pool.at("H(A|B)").form + Rat(1, 2) * pool.at("I(A;B)").form;
    CHECK(mix.coeff == expected.coeff);

    CHECK_THROWS_AS(pick(pool, {{"H(Q)", Rat(1)}}), ScriptError);
    CHECK_THROWS_AS(pick(pool, {{"I(A;B)", Rat(-1)}}), ScriptError);
}

TEST_CASE("a certificate replayed through pick reconstructs its form") {
    const LinForm premise = canon(kPremiseZy);
    const Pool pool = init_pool(premise.ctx);
    const LinForm picked = pick(pool, combo_from_certificate(premise));
    CHECK(picked.coeff == premise.coeff);
}

TEST_CASE("derivation steps append the rule conclusion, balancing on +b") {
    const LinForm premise = canon(kPremiseZy);
    const Partition p = make_partition(premise.ctx, "Z", {"A", "B"}, {"C", "D"});
    const auto combo = combo_from_certificate(premise);

    const Pool pool = init_pool(premise.ctx);
    const std::size_t before = pool.entries.size();

    const Pool after_zy = step(pool, SystemKind::zy, combo, p, "q");
    REQUIRE(after_zy.entries.size() == before + 1);
    const LinForm& q = after_zy.at("q").form;
    CHECK(q.coeff == apply_zy(premise, p).coeff);
    CHECK(after_zy.at("q").prov == Provenance::zy);

    // The conclusion is already balanced, so the +b system adds the same
    // form (deduplicated down to the same entry count).
    const Pool after_zyb = step(pool, SystemKind::zy_b, combo, p, "qb");
    CHECK(after_zyb.at("qb").form.coeff == q.coeff);

    // The conditional-entropy system reaches the same conclusion from the
    // weaker premise.
    const LinForm mmrv_premise = canon(kPremiseMmrv);
    const Pool pool_r = init_pool(mmrv_premise.ctx);
    const Pool after_r =
        step(pool_r, SystemKind::r, combo_from_certificate(mmrv_premise), p, "qr");
    CHECK(after_r.at("qr").form.coeff == q.coeff);
}

TEST_CASE("steps auto-name their conclusions when no name is given") {
    const LinForm premise = canon(kPremiseZy);
    const Partition p = make_partition(premise.ctx, "Z", {"A", "B"}, {"C", "D"});
    const Pool pool = init_pool(premise.ctx);
    const Pool after = step(pool, SystemKind::zy, combo_from_certificate(premise), p);
    const PoolEntry& last = after.entries.back();
    CHECK(last.name == "d" + std::to_string(after.entries.size() - 1));
}

TEST_CASE("pools deduplicate by form and reject name collisions") {
    Pool pool = init_pool(VarContext({"A", "B"}));
    const int existing = pool.find_form(pool.at("I(A;B)").form);
    REQUIRE(existing >= 0);

    PoolEntry dup;
    dup.name = "alias";
    dup.form = pool.at("I(A;B)").form;
    dup.prov = Provenance::given;
    CHECK(pool.add(dup) == existing);
    CHECK_FALSE(pool.has("alias"));  // deduplicated, not renamed

    PoolEntry clash;
    clash.name = "I(A;B)";
    clash.form = canon("H(A) + H(B) >= 0");
    CHECK_THROWS_AS(pool.add(clash), ScriptError);
}

TEST_CASE("provability tracks pool growth") {
    const LinForm premise = canon(kPremiseZy);
    const Partition p = make_partition(premise.ctx, "Z", {"A", "B"}, {"C", "D"});
    const Pool pool = init_pool(premise.ctx);
    const LinForm target = apply_zy(premise, p);

    // The conclusion escapes the elemental cone...
    const ProvableResult before = provable(pool, target);
    CHECK_FALSE(before.provable);
    CHECK(!before.witness.empty());

    // ...but one copy step brings it in, and it stays provable afterwards.
    const Pool after = step(pool, SystemKind::zy, combo_from_certificate(premise), p, "q");
    const ProvableResult hit = provable(after, target);
    REQUIRE(hit.provable);

    const Pool bigger =
        step(after, SystemKind::zy_b, combo_from_certificate(premise), p, "q2");
    CHECK(provable(bigger, target).provable);

    // The premise itself was always provable (it is Shannon-type).
    CHECK(provable(pool, premise).provable);
}

TEST_CASE("substituted conclusions complete the four-variable derivation") {
    const LinForm premise = canon(kPremiseZy);
    const Partition p = make_partition(premise.ctx, "Z", {"A", "B"}, {"C", "D"});
    const LinForm target = aligned_lex(substitute(apply_zy(premise, p), "Z", "A"));

    Pool pool4 = init_pool(target.ctx);
    CHECK_FALSE(provable(pool4, target).provable);

    PoolEntry entry;
    entry.name = "t4";
    entry.form = target;
    entry.prov = Provenance::subst;
    pool4.add(entry);
    const ProvableResult hit = provable(pool4, target);
    REQUIRE(hit.provable);
    REQUIRE(hit.combination.size() == 1);
    CHECK(hit.combination[0].first == "t4");
    CHECK(hit.combination[0].second == 1);
}

TEST_CASE("derived pool entries are numerically sound") {
    const LinForm premise = canon(kPremiseZy);
    const Partition p = make_partition(premise.ctx, "Z", {"A", "B"}, {"C", "D"});
    const Pool pool =
        step(init_pool(premise.ctx), SystemKind::zy, combo_from_certificate(premise), p);

    std::mt19937_64 rng(660001);
    const std::vector<int> sizes(premise.ctx.size(), 2);
    for (int trial = 0; trial < 100; ++trial) {
        const JointPMF pmf = random_pmf(rng, premise.ctx, sizes);
        const EntropyVector h = entropy_vector(pmf);
        for (const auto& entry : pool.entries)
            if (entry.prov != Provenance::given)
                CHECK(evaluate(entry.form, h) >= -1e-9);
    }
}

TEST_CASE("provability demands a shared variable context") {
    const Pool pool = init_pool(VarContext({"A", "B"}));
    const LinForm other = canon("H(C) >= 0");
    CHECK_THROWS_AS(provable(pool, other), ContextMismatchError);
}
