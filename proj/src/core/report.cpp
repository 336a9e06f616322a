#include "core/report.hpp"

#include <algorithm>
#include <vector>

#include <json.hpp>

#include "core/expr.hpp"

namespace entro {

namespace {

using nlohmann::json;

// Witness rows sorted by (subset size, name sequence).
std::vector<std::pair<std::string, Rat>> sorted_witness(const VarContext& ctx,
                                                        const std::map<Mask, Rat>& w) {
    std::vector<std::pair<Mask, Rat>> rows(w.begin(), w.end());
    std::sort(rows.begin(), rows.end(), [&ctx](const auto& a, const auto& b) {
        const int pa = popcount(a.first), pb = popcount(b.first);
        if (pa != pb) return pa < pb;
        return ctx.subset_names(a.first) < ctx.subset_names(b.first);
    });
    std::vector<std::pair<std::string, Rat>> out;
    out.reserve(rows.size());
    for (const auto& [subset, value] : rows)
        out.emplace_back(ctx.subset_label(subset), value);
    return out;
}

}  // namespace

std::string check_report_text(const LinForm& target, const ShannonVerdict& v) {
    std::string out;
    if (v.is_shannon) {
        out += "shannon-type\n";
        out += "certificate:\n";
        const auto elems = target.is_zero() ? std::vector<Elemental>{}
                                            : elementals(target.ctx);
        for (const auto& [id, lambda] : v.certificate)
            out += "  " + rat_str(lambda) + "  " + elems[id].description + "\n";
        if (v.certificate.empty()) out += "  (empty combination)\n";
    } else {
        out += "not-shannon-type\n";
        out += "witness:\n";
        for (const auto& [label, value] : sorted_witness(target.ctx, v.witness))
            out += "  " + label + " = " + rat_str(value) + "\n";
        out += "  value = " + rat_str(witness_value(target, v.witness)) + "\n";
    }
    return out;
}

std::string check_report_json(const LinForm& target, const ShannonVerdict& v) {
    json doc;
    doc["verdict"] = v.is_shannon ? "shannon-type" : "not-shannon-type";
    doc["target"] = render(target);
    if (v.is_shannon) {
        json cert = json::array();
        const auto elems = target.is_zero() ? std::vector<Elemental>{}
                                            : elementals(target.ctx);
        for (const auto& [id, lambda] : v.certificate)
            cert.push_back({{"id", id},
                            {"elemental", elems[id].description},
                            {"lambda", rat_str(lambda)}});
        doc["certificate"] = cert;
    } else {
        json rows = json::array();
        for (const auto& [label, value] : sorted_witness(target.ctx, v.witness))
            rows.push_back({{"subset", label}, {"value", rat_str(value)}});
        doc["witness"] = rows;
        doc["target_value"] = rat_str(witness_value(target, v.witness));
    }
    return doc.dump(2) + "\n";
}

std::string transcript_json(const Transcript& t) {
    json doc;
    switch (t.status) {
        case ScriptStatus::ok: doc["status"] = "ok"; break;
        case ScriptStatus::assertion_failed: doc["status"] = "assertion_failed"; break;
        case ScriptStatus::error: doc["status"] = "error"; break;
    }
    doc["diagnostic"] = t.diagnostic;
    json records = json::array();
    for (const auto& r : t.records)
        records.push_back({{"line", r.line},
                           {"statement", r.text},
                           {"note", r.note},
                           {"assert", r.is_assert},
                           {"passed", r.passed}});
    doc["records"] = records;
    return doc.dump(2) + "\n";
}

std::string elementals_text(const VarContext& ctx) {
    std::string out;
    for (const auto& e : elementals(ctx))
        out += std::to_string(e.id) + "\t" + e.description + "\t" + render(e.form) + "\n";
    return out;
}

std::string elementals_json(const VarContext& ctx) {
    json rows = json::array();
    for (const auto& e : elementals(ctx))
        rows.push_back({{"id", e.id},
                        {"kind", e.kind == ElementalKind::node_entropy ? "node_entropy"
                                                                       : "pair_mi"},
                        {"description", e.description},
                        {"form", render(e.form)}});
    return rows.dump(2) + "\n";
}

}  // namespace entro
