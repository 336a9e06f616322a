#include "core/linform.hpp"

#include <algorithm>

#include "core/errors.hpp"

namespace entro {

Rat LinForm::coefficient(Mask subset) const {
    auto it = coeff.find(subset);
    return it == coeff.end() ? Rat(0) : it->second;
}

void LinForm::add_term(Mask subset, const Rat& value) {
    if (value == 0) return;
    if (subset == 0)
        throw Error("empty subset has no entropy coordinate");
    if (subset & ~ctx.full_mask())
        throw Error("subset mask outside the variable context");
    auto [it, inserted] = coeff.try_emplace(subset, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) coeff.erase(it);
    }
}

LinForm add(const LinForm& a, const LinForm& b) {
    if (a.ctx != b.ctx)
        throw ContextMismatchError("cannot add forms over different variable contexts");
    LinForm out = a;
    for (const auto& [subset, c] : b.coeff) out.add_term(subset, c);
    return out;
}

LinForm scale(const LinForm& a, const Rat& k) {
    LinForm out(a.ctx);
    if (k == 0) return out;
    for (const auto& [subset, c] : a.coeff) out.coeff.emplace(subset, c * k);
    return out;
}

Rat coefficient_sum_over(const LinForm& a, const std::string& v) {
    const Mask bit = a.ctx.bit(v);  // throws UnknownVariableError
    Rat sum = 0;
    for (const auto& [subset, c] : a.coeff)
        if (subset & bit) sum += c;
    return sum;
}

LinForm operator-(const LinForm& a, const LinForm& b) {
    return add(a, scale(b, Rat(-1)));
}

LinForm entropy_of(const VarContext& ctx, Mask j) {
    LinForm out(ctx);
    out.add_term(j, Rat(1));
    return out;
}

LinForm cond_entropy(const VarContext& ctx, Mask j, Mask l) {
    // H(J|L) = H(J u L) - H(L)
    LinForm out(ctx);
    out.add_term(j | l, Rat(1));
    if (l) out.add_term(l, Rat(-1));
    return out;
}

LinForm mutual_info(const VarContext& ctx, Mask j, Mask k, Mask l) {
    // I(J;K|L) = H(J u L) + H(K u L) - H(J u K u L) - H(L).
    // J and K may overlap; terms cancel via add_term as needed.
    LinForm out(ctx);
    out.add_term(j | l, Rat(1));
    out.add_term(k | l, Rat(1));
    out.add_term(j | k | l, Rat(-1));
    if (l) out.add_term(l, Rat(-1));
    return out;
}

LinForm embedded(const LinForm& f, const VarContext& super) {
    std::vector<int> bit_map(f.ctx.size());
    for (int i = 0; i < f.ctx.size(); ++i)
        bit_map[i] = super.index_of(f.ctx.names[i]);  // throws on missing name
    LinForm out(super);
    for (const auto& [subset, c] : f.coeff) {
        Mask mapped = 0;
        for (int i = 0; i < f.ctx.size(); ++i)
            if (subset & (Mask(1) << i)) mapped |= Mask(1) << bit_map[i];
        out.add_term(mapped, c);
    }
    return out;
}

LinForm aligned_lex(const LinForm& f) {
    std::vector<std::string> sorted_names = f.ctx.names;
    std::sort(sorted_names.begin(), sorted_names.end());
    if (sorted_names == f.ctx.names) return f;
    return embedded(f, VarContext(std::move(sorted_names)));
}

}  // namespace entro
