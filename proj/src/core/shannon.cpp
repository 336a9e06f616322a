#include "core/shannon.hpp"

#include <cstdlib>

#include "core/errors.hpp"
#include "core/simplex.hpp"

namespace entro {

int max_lp_n() {
    int cap = 8;
    if (const char* env = std::getenv("ENTROPROVER_MAX_N")) {
        char* end = nullptr;
        const long parsed = std::strtol(env, &end, 10);
        if (end && *end == '\0' && parsed >= 1)
            cap = parsed < 8 ? static_cast<int>(parsed) : 8;
    }
    return cap;
}

namespace {

void check_lp_size(int n) {
    if (n < 1 || n > max_lp_n())
        throw LimitError("Shannon-cone decisions support 1.." + std::to_string(max_lp_n()) +
                         " variables, got " + std::to_string(n));
}

// Spread the bits of `compact` over the positions of `allowed` (ascending).
Mask spread_mask(Mask compact, Mask allowed) {
    Mask out = 0;
    while (allowed) {
        const Mask low = allowed & (~allowed + 1);
        if (compact & 1) out |= low;
        compact >>= 1;
        allowed &= allowed - 1;
    }
    return out;
}

}  // namespace

std::vector<Elemental> elementals(const VarContext& ctx) {
    const int n = ctx.size();
    check_lp_size(n);
    const Mask full = ctx.full_mask();
    std::vector<Elemental> out;

    for (int i = 0; i < n; ++i) {
        Elemental e;
        e.id = static_cast<int>(out.size());
        e.kind = ElementalKind::node_entropy;
        e.i = i;
        const Mask rest = full & ~(Mask(1) << i);
        e.form = cond_entropy(ctx, Mask(1) << i, rest);
        e.description = "H(" + ctx.names[i] +
                        (rest ? "|" + ctx.subset_label(rest) : "") + ")";
        out.push_back(std::move(e));
    }

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Mask rest = full & ~(Mask(1) << i) & ~(Mask(1) << j);
            const Mask count = Mask(1) << popcount(rest);
            for (Mask compact = 0; compact < count; ++compact) {
                Elemental e;
                e.id = static_cast<int>(out.size());
                e.kind = ElementalKind::pair_mi;
                e.i = i;
                e.j = j;
                e.k = spread_mask(compact, rest);
                e.form = mutual_info(ctx, Mask(1) << i, Mask(1) << j, e.k);
                e.description = "I(" + ctx.names[i] + ";" + ctx.names[j] +
                                (e.k ? "|" + ctx.subset_label(e.k) : "") + ")";
                out.push_back(std::move(e));
            }
        }
    }
    return out;
}

ShannonVerdict check_shannon(const LinForm& f) {
    ShannonVerdict verdict;
    if (f.is_zero()) {
        // The tautology is the empty combination.
        verdict.is_shannon = true;
        return verdict;
    }
    const int n = f.ctx.size();
    check_lp_size(n);

    const std::vector<Elemental> elems = elementals(f.ctx);
    const std::size_t dim = (std::size_t(1) << n) - 1;
    auto densify = [dim](const LinForm& form) {
        std::vector<Rat> v(dim, Rat(0));
        for (const auto& [subset, c] : form.coeff) v[subset - 1] = c;
        return v;
    };
    std::vector<std::vector<Rat>> gens;
    gens.reserve(elems.size());
    for (const auto& e : elems) gens.push_back(densify(e.form));

    const ConeSolve solved = solve_cone_membership(gens, densify(f));
    verdict.is_shannon = solved.member;
    if (solved.member) {
        for (std::size_t e = 0; e < solved.combo.size(); ++e)
            if (solved.combo[e] != 0)
                verdict.certificate.emplace_back(static_cast<int>(e), solved.combo[e]);
    } else {
        for (std::size_t i = 0; i < solved.witness.size(); ++i)
            if (solved.witness[i] != 0)
                verdict.witness.emplace(static_cast<Mask>(i + 1), solved.witness[i]);
    }
    return verdict;
}

bool verify_certificate(const LinForm& target,
                        const std::vector<std::pair<int, Rat>>& cert) {
    if (target.is_zero() && cert.empty()) return true;
    try {
        const std::vector<Elemental> elems = elementals(target.ctx);
        LinForm sum(target.ctx);
        for (const auto& [id, lambda] : cert) {
            if (id < 0 || id >= static_cast<int>(elems.size())) return false;
            if (lambda < 0) return false;
            sum = sum + lambda * elems[id].form;
        }
        return sum == target;
    } catch (const Error&) {
        return false;
    }
}

Rat witness_value(const LinForm& f, const std::map<Mask, Rat>& witness) {
    Rat value = 0;
    for (const auto& [subset, c] : f.coeff) {
        auto it = witness.find(subset);
        if (it != witness.end()) value += c * it->second;
    }
    return value;
}

bool verify_witness(const LinForm& target, const std::map<Mask, Rat>& witness) {
    try {
        for (const auto& e : elementals(target.ctx))
            if (witness_value(e.form, witness) < 0) return false;
        return witness_value(target, witness) < 0;
    } catch (const Error&) {
        return false;
    }
}

}  // namespace entro
