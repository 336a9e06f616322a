#include "core/rules.hpp"

#include "core/errors.hpp"

namespace entro {

Partition make_partition(const VarContext& ctx, const std::string& z,
                         const std::vector<std::string>& xs,
                         const std::vector<std::string>& ys) {
    Partition p;
    p.z = ctx.index_of(z);
    p.xgroup = ctx.subset_mask(xs);
    p.ygroup = ctx.subset_mask(ys);
    if (p.xgroup == 0)
        throw RuleShapeError("the x-group must be nonempty");
    if ((p.xgroup & p.ygroup) || (p.zbit() & (p.xgroup | p.ygroup)))
        throw RuleShapeError("z, x-group and y-group must be pairwise disjoint");
    if ((p.zbit() | p.xgroup | p.ygroup) != ctx.full_mask())
        throw RuleShapeError("z, x-group and y-group must cover the whole context");
    return p;
}

ZYDecomposition decompose_zy(const LinForm& h, const Partition& p) {
    ZYDecomposition d;
    d.p = p;

    // alpha comes from the full-set coordinate: expanding alpha*I(z;X|Y)
    // contributes -alpha to H(X u Y u {z}) and no f- or g-shaped term can
    // reach that coordinate (it contains z and all of X).
    const Mask full = h.ctx.full_mask();
    d.alpha = -h.coefficient(full);
    if (d.alpha < 0)
        throw NegativeAlphaError("premise has negative copy-term coefficient " +
                                 rat_str(d.alpha));

    const LinForm residual =
        h - d.alpha * mutual_info(h.ctx, p.zbit(), p.xgroup, p.ygroup);

    d.f = LinForm(h.ctx);
    d.g = LinForm(h.ctx);
    const Mask gspace = p.ygroup | p.zbit();
    for (const auto& [subset, c] : residual.coeff) {
        if ((subset & gspace) == subset) {
            d.g.add_term(subset, c);
        } else if (!(subset & p.zbit())) {
            d.f.add_term(subset, c);
        } else {
            throw MixedTermError("term H(" + h.ctx.subset_label(subset) +
                                 ") mixes the copy variable with part of the x-group");
        }
    }
    return d;
}

LinForm apply_zy(const LinForm& h, const Partition& p) {
    const ZYDecomposition d = decompose_zy(h, p);
    return d.f + d.g;
}

LinForm apply_mmrv(const LinForm& h, const Partition& p) {
    // Premise shape: no term may contain z together with x-group variables
    // (in particular alpha = 0 in the decomposition sense).
    for (const auto& [subset, c] : h.coeff)
        if ((subset & p.zbit()) && (subset & p.xgroup))
            throw MixedTermError("term H(" + h.ctx.subset_label(subset) +
                                 ") mixes the copy variable with part of the x-group");
    const Rat r_z = coefficient_sum_over(h, h.ctx.names[p.z]);
    return h - r_z * cond_entropy(h.ctx, p.zbit(), p.ygroup);
}

LinForm substitute(const LinForm& f, const std::string& from, const std::string& to) {
    const int from_pos = f.ctx.index_of(from);
    if (from == to)
        throw UnknownVariableError("substitution source and target are both '" + from + "'");

    if (!f.ctx.has(to)) {
        // Pure rename: same arity, the bit position keeps its mask meaning.
        if (!is_identifier(to))
            throw ParseError("invalid variable name '" + to + "'");
        std::vector<std::string> names = f.ctx.names;
        names[from_pos] = to;
        LinForm out{VarContext(std::move(names))};
        out.coeff = f.coeff;
        return out;
    }

    // Identification: subsets map to (J - from) u to and the context drops
    // `from`; collided coefficients are summed.
    std::vector<std::string> names;
    for (const auto& name : f.ctx.names)
        if (name != from) names.push_back(name);
    LinForm out{VarContext(std::move(names))};
    const Mask from_bit = f.ctx.bit(from);
    for (const auto& [subset, c] : f.coeff) {
        std::vector<std::string> members = f.ctx.subset_names(subset & ~from_bit);
        if (subset & from_bit) {
            if (!(subset & f.ctx.bit(to))) members.push_back(to);
        }
        out.add_term(out.ctx.subset_mask(members), c);
    }
    return out;
}

LinForm zy_premise_to_mmrv_premise(const ZYDecomposition& d) {
    return d.f + d.g +
           d.alpha * cond_entropy(d.f.ctx, d.p.zbit(), d.p.ygroup);
}

LinForm mmrv_premise_to_zy_premise(const LinForm& h, const Partition& p) {
    for (const auto& [subset, c] : h.coeff)
        if ((subset & p.zbit()) && (subset & p.xgroup))
            throw MixedTermError("term H(" + h.ctx.subset_label(subset) +
                                 ") mixes the copy variable with part of the x-group");
    const Rat r_z = coefficient_sum_over(h, h.ctx.names[p.z]);
    return h - r_z * cond_entropy(h.ctx, p.zbit(), p.ygroup) +
           r_z * mutual_info(h.ctx, p.zbit(), p.xgroup, p.ygroup);
}

}  // namespace entro
