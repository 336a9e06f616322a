#include "entroprover.h"

#include <cstring>
#include <optional>
#include <string>
#include <vector>

#include "core/balance.hpp"
#include "core/errors.hpp"
#include "core/expr.hpp"
#include "core/report.hpp"
#include "core/rules.hpp"
#include "core/script.hpp"
#include "core/semantics.hpp"
#include "core/shannon.hpp"

using namespace entro;

struct ep_form {
    LinForm form;
};

struct ep_pmf {
    JointPMF pmf;
};

namespace {

thread_local std::string g_last_error;

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

ep_status fail(ep_status code, const std::string& message) {
    g_last_error = message;
    return code;
}

ep_status classify(const Error& err) {
    if (dynamic_cast<const ParseError*>(&err)) return EP_ERR_PARSE;
    if (dynamic_cast<const ContextMismatchError*>(&err)) return EP_ERR_CONTEXT;
    if (dynamic_cast<const UnknownVariableError*>(&err)) return EP_ERR_VARIABLE;
    if (dynamic_cast<const LimitError*>(&err)) return EP_ERR_LIMIT;
    if (dynamic_cast<const RuleShapeError*>(&err)) return EP_ERR_SHAPE;
    if (dynamic_cast<const PmfError*>(&err)) return EP_ERR_PMF;
    if (dynamic_cast<const ScriptError*>(&err)) return EP_ERR_SCRIPT;
    return EP_ERR_INTERNAL;
}

// Runs `body` and translates exceptions into status codes.
template <typename Fn>
ep_status guarded(Fn&& body) {
    try {
        return body();
    } catch (const Error& err) {
        return fail(classify(err), err.what());
    } catch (const std::exception& err) {
        return fail(EP_ERR_INTERNAL, err.what());
    }
}

std::vector<std::string> split_csv(const char* csv) {
    std::vector<std::string> out;
    if (!csv) return out;
    const std::string text(csv);
    std::size_t begin = 0;
    while (begin <= text.size()) {
        auto end = text.find(',', begin);
        if (end == std::string::npos) end = text.size();
        std::string item = text.substr(begin, end - begin);
        const auto first = item.find_first_not_of(" \t");
        if (first != std::string::npos) {
            const auto last = item.find_last_not_of(" \t");
            out.push_back(item.substr(first, last - first + 1));
        }
        begin = end + 1;
    }
    return out;
}

Partition partition_of(const LinForm& f, const char* z, const char* x_csv,
                       const char* y_csv) {
    if (!z) throw RuleShapeError("missing copy variable");
    return make_partition(f.ctx, z, split_csv(x_csv), split_csv(y_csv));
}

}  // namespace

extern "C" {

const char* ep_last_error(void) {
    return g_last_error.c_str();
}

void ep_string_free(char* s) {
    delete[] s;
}

void ep_form_free(ep_form* f) {
    delete f;
}

void ep_pmf_free(ep_pmf* p) {
    delete p;
}

ep_status ep_form_parse(const char* text, const char* ctx_csv, ep_form** primary,
                        ep_form** secondary) {
    if (!text || !primary) return fail(EP_ERR_INVALID, "null argument");
    return guarded([&]() {
        std::optional<VarContext> ctx;
        if (ctx_csv) ctx = VarContext(split_csv(ctx_csv));
        const CanonResult canon = canonicalize_text(text, ctx ? &*ctx : nullptr);
        if (canon.secondary && !secondary)
            return fail(EP_ERR_PARSE, "equalities are not accepted here");
        *primary = new ep_form{canon.primary};
        if (secondary)
            *secondary = canon.secondary ? new ep_form{*canon.secondary} : nullptr;
        return EP_OK;
    });
}

ep_status ep_form_render(const ep_form* f, char** out) {
    if (!f || !out) return fail(EP_ERR_INVALID, "null argument");
    return guarded([&]() {
        *out = (copy_string(render(f->form)));
        return EP_OK;
    });
}

ep_status ep_form_arity(const ep_form* f, int* out) {
    if (!f || !out) return fail(EP_ERR_INVALID, "null argument");
    *out = f->form.ctx.size();
    return EP_OK;
}

ep_status ep_form_balance(const ep_form* f, ep_form** out, char** negative_r_csv) {
    if (!f || !out) return fail(EP_ERR_INVALID, "null argument");
    return guarded([&]() {
        const BalanceInfo info = balance_full(f->form);
        *out = new ep_form{info.form};
        if (negative_r_csv) {
            std::string joined;
            for (const auto& name : info.negative_r) {
                if (!joined.empty()) joined += ',';
                joined += name;
            }
            *negative_r_csv = copy_string(joined);
        }
        return EP_OK;
    });
}

ep_status ep_form_is_balanced(const ep_form* f, const char* var, int* out) {
    if (!f || !out) return fail(EP_ERR_INVALID, "null argument");
    return guarded([&]() {
        *out = (var ? is_balanced_for(f->form, var) : is_balanced(f->form)) ? 1 : 0;
        return EP_OK;
    });
}

ep_status ep_form_check(const ep_form* f, int structured, int* is_shannon,
                        char** report) {
    if (!f) return fail(EP_ERR_INVALID, "null argument");
    return guarded([&]() {
        const ShannonVerdict verdict = check_shannon(f->form);
        if (is_shannon) *is_shannon = verdict.is_shannon ? 1 : 0;
        if (report)
            *report = (
                copy_string(structured ? check_report_json(f->form, verdict)
                                       : check_report_text(f->form, verdict)));
        return EP_OK;
    });
}

ep_status ep_form_zy(const ep_form* f, const char* z, const char* x_csv,
                     const char* y_csv, ep_form** out) {
    if (!f || !out) return fail(EP_ERR_INVALID, "null argument");
    return guarded([&]() {
        *out = new ep_form{apply_zy(f->form, partition_of(f->form, z, x_csv, y_csv))};
        return EP_OK;
    });
}

ep_status ep_form_mmrv(const ep_form* f, const char* z, const char* x_csv,
                       const char* y_csv, ep_form** out) {
    if (!f || !out) return fail(EP_ERR_INVALID, "null argument");
    return guarded([&]() {
        *out = new ep_form{apply_mmrv(f->form, partition_of(f->form, z, x_csv, y_csv))};
        return EP_OK;
    });
}

ep_status ep_form_subst(const ep_form* f, const char* from, const char* to,
                        ep_form** out) {
    if (!f || !from || !to || !out) return fail(EP_ERR_INVALID, "null argument");
    return guarded([&]() {
        *out = new ep_form{substitute(f->form, from, to)};
        return EP_OK;
    });
}

ep_status ep_pmf_parse(const char* text, ep_pmf** out) {
    if (!text || !out) return fail(EP_ERR_INVALID, "null argument");
    return guarded([&]() {
        *out = new ep_pmf{parse_pmf(text)};
        return EP_OK;
    });
}

ep_status ep_pmf_render(const ep_pmf* p, char** out) {
    if (!p || !out) return fail(EP_ERR_INVALID, "null argument");
    return guarded([&]() {
        *out = (copy_string(render_pmf(p->pmf)));
        return EP_OK;
    });
}

ep_status ep_form_eval(const ep_form* f, const ep_pmf* p, double* value) {
    if (!f || !p || !value) return fail(EP_ERR_INVALID, "null argument");
    return guarded([&]() {
        // The pmf's context must carry exactly the form's variables; align
        // the form when the orders differ.
        LinForm aligned = f->form;
        if (aligned.ctx != p->pmf.ctx) aligned = embedded(aligned, p->pmf.ctx);
        *value = evaluate(aligned, entropy_vector(p->pmf));
        return EP_OK;
    });
}

ep_status ep_pmf_copy_var(const ep_pmf* p, const char* a, const char* b_csv,
                          const char* c_csv, ep_pmf** out) {
    if (!p || !a || !out) return fail(EP_ERR_INVALID, "null argument");
    return guarded([&]() {
        *out = new ep_pmf{copy_distribution(p->pmf, a, split_csv(b_csv), split_csv(c_csv))};
        return EP_OK;
    });
}

ep_status ep_run_script(const char* text, int structured, int* outcome,
                        char** transcript) {
    if (!text) return fail(EP_ERR_INVALID, "null argument");
    return guarded([&]() {
        const Transcript t = run_script(text);
        if (t.status == ScriptStatus::error)
            return fail(EP_ERR_SCRIPT, t.diagnostic);
        if (outcome) *outcome = t.status == ScriptStatus::ok ? 0 : 1;
        if (transcript)
            *transcript = (
                copy_string(structured ? transcript_json(t) : transcript_text(t)));
        return EP_OK;
    });
}

ep_status ep_elementals(int n, int structured, char** out) {
    if (!out) return fail(EP_ERR_INVALID, "null argument");
    return guarded([&]() {
        if (n < 1 || n > kMaxContextSize)
            throw LimitError("variable count out of range");
        std::vector<std::string> names;
        for (int i = 0; i < n; ++i) {
            std::string name(1, static_cast<char>('A' + i % 26));
            if (i >= 26) name += std::to_string(i / 26);
            names.push_back(name);
        }
        const VarContext ctx(std::move(names));
        *out = const_cast<char*>(
            copy_string(structured ? elementals_json(ctx) : elementals_text(ctx)));
        return EP_OK;
    });
}

int ep_max_n(void) {
    return max_lp_n();
}

}  // extern "C"
