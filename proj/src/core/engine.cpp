#include "core/engine.hpp"

#include "core/balance.hpp"
#include "core/errors.hpp"
#include "core/shannon.hpp"
#include "core/simplex.hpp"

namespace entro {

SystemKind parse_system(const std::string& name) {
    if (name == "zy") return SystemKind::zy;
    if (name == "zy+b") return SystemKind::zy_b;
    if (name == "r") return SystemKind::r;
    if (name == "r+b") return SystemKind::r_b;
    throw ScriptError("unknown proof system '" + name + "' (expected zy, zy+b, r or r+b)");
}

std::string system_name(SystemKind kind) {
    switch (kind) {
        case SystemKind::zy: return "zy";
        case SystemKind::zy_b: return "zy+b";
        case SystemKind::r: return "r";
        case SystemKind::r_b: return "r+b";
    }
    return "?";
}

const PoolEntry& Pool::at(const std::string& name) const {
    auto it = by_name.find(name);
    if (it == by_name.end())
        throw ScriptError("unknown pool entry '" + name + "'");
    return entries[it->second];
}

int Pool::find_form(const LinForm& form) const {
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (entries[i].form == form) return static_cast<int>(i);
    return -1;
}

int Pool::add(PoolEntry entry) {
    const int existing = find_form(entry.form);
    if (existing >= 0) return existing;
    if (by_name.count(entry.name))
        throw ScriptError("pool entry '" + entry.name + "' already exists");
    entries.push_back(std::move(entry));
    const int index = static_cast<int>(entries.size()) - 1;
    by_name.emplace(entries.back().name, index);
    return index;
}

Pool init_pool(const VarContext& ctx) {
    Pool pool;
    pool.ctx = ctx;
    for (auto& e : elementals(ctx)) {
        PoolEntry entry;
        entry.name = e.description;
        entry.form = std::move(e.form);
        entry.prov = Provenance::elemental;
        pool.add(std::move(entry));
    }
    return pool;
}

LinForm pick(const Pool& pool, const std::vector<std::pair<std::string, Rat>>& combo) {
    LinForm sum(pool.ctx);
    for (const auto& [name, lambda] : combo) {
        if (lambda < 0)
            throw ScriptError("negative coefficient " + rat_str(lambda) + " for '" + name +
                              "' in a conic combination");
        sum = sum + lambda * pool.at(name).form;
    }
    return sum;
}

Pool step(const Pool& pool, SystemKind kind,
          const std::vector<std::pair<std::string, Rat>>& combo,
          const Partition& partition, const std::string& name) {
    const LinForm premise = pick(pool, combo);
    LinForm conclusion;
    Provenance prov;
    switch (kind) {
        case SystemKind::zy:
        case SystemKind::zy_b:
            conclusion = apply_zy(premise, partition);
            prov = Provenance::zy;
            break;
        case SystemKind::r:
        case SystemKind::r_b:
            conclusion = apply_mmrv(premise, partition);
            prov = Provenance::mmrv;
            break;
        default:
            throw ScriptError("invalid system kind");
    }
    if (kind == SystemKind::zy_b || kind == SystemKind::r_b)
        conclusion = balance(conclusion);

    Pool out = pool;
    PoolEntry entry;
    entry.name = name.empty() ? "d" + std::to_string(out.entries.size()) : name;
    entry.form = std::move(conclusion);
    entry.prov = prov;
    entry.partition = partition;
    for (const auto& [pname, lambda] : combo) {
        (void)lambda;
        entry.parents.push_back(out.by_name.at(pname));
    }
    out.add(std::move(entry));
    return out;
}

ProvableResult provable(const Pool& pool, const LinForm& target) {
    if (target.ctx != pool.ctx)
        throw ContextMismatchError("target and pool use different variable contexts");
    const int n = pool.ctx.size();
    const std::size_t dim = n == 0 ? 0 : (std::size_t(1) << n) - 1;

    ProvableResult out;
    if (target.is_zero()) {
        out.provable = true;
        return out;
    }

    auto densify = [dim](const LinForm& form) {
        std::vector<Rat> v(dim, Rat(0));
        for (const auto& [subset, c] : form.coeff) v[subset - 1] = c;
        return v;
    };
    std::vector<std::vector<Rat>> gens;
    gens.reserve(pool.entries.size());
    for (const auto& entry : pool.entries) gens.push_back(densify(entry.form));

    const ConeSolve solved = solve_cone_membership(gens, densify(target));
    out.provable = solved.member;
    if (solved.member) {
        for (std::size_t i = 0; i < solved.combo.size(); ++i)
            if (solved.combo[i] != 0)
                out.combination.emplace_back(pool.entries[i].name, solved.combo[i]);
    } else {
        for (std::size_t i = 0; i < solved.witness.size(); ++i)
            if (solved.witness[i] != 0)
                out.witness.emplace(static_cast<Mask>(i + 1), solved.witness[i]);
    }
    return out;
}

}  // namespace entro
