#include "core/script.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include "core/balance.hpp"
#include "core/engine.hpp"
#include "core/errors.hpp"
#include "core/expr.hpp"
#include "core/rules.hpp"
#include "core/shannon.hpp"
#include "core/simplex.hpp"

namespace entro {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::string strip_quotes(const std::string& s) {
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"')
        return s.substr(1, s.size() - 2);
    return s;
}

// Accepts the forms NAME, "ineq", canonical("ineq"), canonical(ineq).
std::string strip_canonical_wrapper(const std::string& s) {
    const std::string prefix = "canonical(";
    if (s.size() > prefix.size() + 1 && s.compare(0, prefix.size(), prefix) == 0 &&
        s.back() == ')')
        return strip_quotes(trim(s.substr(prefix.size(), s.size() - prefix.size() - 1)));
    return strip_quotes(s);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string word;
    while (in >> word) out.push_back(word);
    return out;
}

std::vector<std::string> split_char(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t begin = 0;
    while (true) {
        const auto pos = s.find(sep, begin);
        if (pos == std::string::npos) {
            out.push_back(s.substr(begin));
            return out;
        }
        out.push_back(s.substr(begin, pos - begin));
        begin = pos + 1;
    }
}

struct ScriptEntry {
    std::string name;
    LinForm form;
    Provenance prov = Provenance::given;
    std::vector<std::string> parents;  // let-bound sources (elementals omitted)
    int line = 0;
};

// tri-state memo
enum class Memo { unknown, yes, no };

class ScriptRun {
  public:
    Transcript run(const std::string& text) {
        std::istringstream input(text);
        std::string line;
        int line_no = 0;
        while (std::getline(input, line)) {
            ++line_no;
            if (const auto hash = line.find('#'); hash != std::string::npos)
                line.erase(hash);
            const std::string stmt = trim(line);
            if (stmt.empty()) continue;
            ScriptRecord record;
            record.line = line_no;
            record.text = stmt;
            try {
                execute(stmt, record);
            } catch (const Error& err) {
                record.passed = false;
                record.note = std::string("error: ") + err.what();
                transcript_.records.push_back(record);
                transcript_.status = ScriptStatus::error;
                transcript_.diagnostic =
                    "line " + std::to_string(line_no) + ": " + err.what();
                return transcript_;
            }
            transcript_.records.push_back(record);
            if (record.is_assert && !record.passed) {
                transcript_.status = ScriptStatus::assertion_failed;
                transcript_.diagnostic = "line " + std::to_string(line_no) +
                                         ": assertion failed: " + record.note;
                return transcript_;
            }
        }
        return transcript_;
    }

  private:
    void execute(const std::string& stmt, ScriptRecord& record) {
        if (stmt.rfind("let ", 0) == 0) {
            exec_let(stmt, record);
        } else if (stmt.rfind("assert ", 0) == 0) {
            exec_assert(stmt, record);
        } else {
            throw ScriptError("expected 'let' or 'assert'", record.line);
        }
    }

    // ---- let ------------------------------------------------------------

    void exec_let(const std::string& stmt, ScriptRecord& record) {
        const auto eq = stmt.find('=');
        if (eq == std::string::npos)
            throw ScriptError("expected 'let <name> = ...'", record.line);
        const std::string name = trim(stmt.substr(4, eq - 4));
        if (!is_identifier(name))
            throw ScriptError("invalid name '" + name + "'", record.line);
        if (entries_.count(name))
            throw ScriptError("name '" + name + "' already bound", record.line);
        const std::string body = trim(stmt.substr(eq + 1));
        if (body.empty())
            throw ScriptError("missing right-hand side", record.line);

        ScriptEntry entry;
        entry.name = name;
        entry.line = record.line;
        const std::string verb = split_ws(body).front();
        if (verb == "combo") {
            exec_combo(body, entry, record.line);
        } else if (verb == "zy" || verb == "mmrv") {
            exec_rule(body, entry, record.line);
        } else if (verb == "balance") {
            const auto args = split_ws(body);
            if (args.size() != 2)
                throw ScriptError("expected 'balance <name>'", record.line);
            const ScriptEntry& src = lookup(args[1], record.line);
            entry.form = balance(src.form);
            entry.prov = Provenance::balance;
            entry.parents = {src.name};
        } else if (verb == "subst") {
            exec_subst(body, entry, record.line);
        } else {
            const CanonResult canon = canonicalize_text(strip_quotes(body));
            if (canon.secondary)
                throw ScriptError(
                    "equalities cannot be bound; state one direction as an inequality",
                    record.line);
            entry.form = canon.primary;
            entry.prov = Provenance::given;
        }
        current_ctx_ = entry.form.ctx;
        record.note = "= " + render(entry.form);
        order_.push_back(name);
        entries_.emplace(name, std::move(entry));
    }

    void exec_combo(const std::string& body, ScriptEntry& entry, int line) {
        // combo NAME:RAT + NAME:RAT + ...
        const std::string rest = trim(body.substr(5));
        if (rest.empty()) throw ScriptError("empty combination", line);
        std::vector<std::pair<std::string, Rat>> items;
        for (const std::string& piece : split_char(rest, '+')) {
            const std::string item = trim(piece);
            const auto colon = item.rfind(':');
            if (colon == std::string::npos || colon + 1 >= item.size())
                throw ScriptError("expected '<name>:<rational>', got '" + item + "'", line);
            const std::string iname = trim(item.substr(0, colon));
            const Rat lambda = parse_rat(trim(item.substr(colon + 1)));
            if (lambda < 0)
                throw ScriptError("negative coefficient in combination", line);
            items.emplace_back(iname, lambda);
        }

        // Resolve in the context of the first let-bound participant, falling
        // back to the context of the most recent let for pure-elemental
        // combinations.
        std::optional<VarContext> ctx;
        for (const auto& [iname, lambda] : items) {
            (void)lambda;
            if (auto it = entries_.find(iname); it != entries_.end()) {
                ctx = it->second.form.ctx;
                break;
            }
        }
        if (!ctx) ctx = current_ctx_;
        if (!ctx || ctx->size() == 0)
            throw ScriptError("no context available to resolve elemental names", line);

        LinForm sum(*ctx);
        for (const auto& [iname, lambda] : items) {
            if (auto it = entries_.find(iname); it != entries_.end()) {
                if (it->second.form.ctx != *ctx)
                    throw ScriptError("'" + iname + "' uses a different variable context",
                                      line);
                sum = sum + lambda * it->second.form;
                entry.parents.push_back(iname);
            } else {
                sum = sum + lambda * elemental_form(*ctx, iname, line);
            }
        }
        entry.form = std::move(sum);
        entry.prov = Provenance::combination;
    }

    void exec_rule(const std::string& body, ScriptEntry& entry, int line) {
        // zy|mmrv NAME z=V x={A,B} y={C,D}
        const auto args = split_ws(body);
        if (args.size() != 5)
            throw ScriptError("expected '" + args[0] +
                                  " <name> z=<var> x={<vars>} y={<vars>}'"
                                  " (no spaces inside braces)",
                              line);
        const ScriptEntry& src = lookup(args[1], line);
        auto take = [&](const std::string& arg, const std::string& prefix) {
            if (arg.rfind(prefix, 0) != 0)
                throw ScriptError("expected '" + prefix + "...', got '" + arg + "'", line);
            return arg.substr(prefix.size());
        };
        const std::string z = take(args[2], "z=");
        auto braced = [&](const std::string& arg, const std::string& prefix) {
            std::string inner = take(arg, prefix);
            if (inner.empty() || inner.back() != '}')
                throw ScriptError("expected '" + prefix + "<vars>}'", line);
            inner.pop_back();
            std::vector<std::string> vars;
            if (!inner.empty())
                for (const auto& v : split_char(inner, ',')) vars.push_back(trim(v));
            return vars;
        };
        const auto xs = braced(args[3], "x={");
        const auto ys = braced(args[4], "y={");
        const Partition p = make_partition(src.form.ctx, z, xs, ys);
        if (args[0] == "zy") {
            entry.form = apply_zy(src.form, p);
            entry.prov = Provenance::zy;
        } else {
            entry.form = apply_mmrv(src.form, p);
            entry.prov = Provenance::mmrv;
        }
        entry.parents = {src.name};
    }

    void exec_subst(const std::string& body, ScriptEntry& entry, int line) {
        // subst NAME FROM->TO
        auto args = split_ws(body);
        if (args.size() < 3)
            throw ScriptError("expected 'subst <name> <var>-><var>'", line);
        const ScriptEntry& src = lookup(args[1], line);
        std::string map;
        for (std::size_t i = 2; i < args.size(); ++i) map += args[i];
        const auto arrow = map.find("->");
        if (arrow == std::string::npos)
            throw ScriptError("expected '<var>-><var>'", line);
        const std::string from = map.substr(0, arrow);
        const std::string to = map.substr(arrow + 2);
        // Keep script contexts lexicographically sorted so entries combine.
        entry.form = aligned_lex(substitute(src.form, from, to));
        entry.prov = Provenance::subst;
        entry.parents = {src.name};
    }

    // ---- assert ---------------------------------------------------------

    void exec_assert(const std::string& stmt, ScriptRecord& record) {
        record.is_assert = true;
        const auto args = split_ws(stmt);
        if (args.size() < 3)
            throw ScriptError("incomplete assertion", record.line);
        const std::string& kind = args[1];

        if (kind == "shannon" || kind == "not-shannon") {
            const ScriptEntry& e = lookup(args[2], record.line);
            const bool is_shannon = shannon_certified(e.name);
            const bool expect = kind == "shannon";
            record.passed = is_shannon == expect;
            record.note = record.passed
                              ? std::string("PASS: ") +
                                    (is_shannon ? "certificate found" : "witness found")
                              : std::string("FAIL: form is ") +
                                    (is_shannon ? "a certificate holder (Shannon-type)"
                                                : "separated by a witness (not Shannon-type)");
        } else if (kind == "equal") {
            const ScriptEntry& e = lookup(args[2], record.line);
            // Slice off "assert equal <name>" positionally: token values may
            // recur inside one another, so substring search is not safe.
            std::size_t pos = 0;
            for (int skipped = 0; skipped < 3; ++skipped) {
                pos = stmt.find_first_not_of(" \t", pos);
                pos = stmt.find_first_of(" \t", pos);
                if (pos == std::string::npos && skipped < 2)
                    throw ScriptError("expected 'assert equal <name> <target>'", record.line);
            }
            if (pos == std::string::npos)
                throw ScriptError("expected 'assert equal <name> <target>'", record.line);
            const std::string rest = trim(stmt.substr(pos));
            LinForm other = resolve_form(rest, record.line);
            const LinForm a = aligned_lex(e.form);
            const LinForm b = aligned_lex(other);
            if (a.ctx != b.ctx) {
                record.passed = false;
                record.note = "FAIL: variable sets differ";
            } else {
                record.passed = a == b;
                record.note = record.passed
                                  ? "PASS: forms identical"
                                  : "FAIL: forms differ: " + render(a) + "  vs  " + render(b);
            }
        } else if (kind == "balanced") {
            const ScriptEntry& e = lookup(args[2], record.line);
            if (args.size() == 5 && args[3] == "for") {
                record.passed = is_balanced_for(e.form, args[4]);
                record.note = record.passed
                                  ? "PASS: balanced for " + args[4]
                                  : "FAIL: residual weight " +
                                        rat_str(coefficient_sum_over(e.form, args[4])) +
                                        " on " + args[4];
            } else if (args.size() == 3) {
                record.passed = is_balanced(e.form);
                record.note = record.passed ? "PASS: balanced" : "FAIL: not balanced";
            } else {
                throw ScriptError("expected 'assert balanced <name> [for <var>]'",
                                  record.line);
            }
        } else if (kind == "provable") {
            if (args.size() != 5 || args[3] != "in")
                throw ScriptError("expected 'assert provable <name> in <system>'",
                                  record.line);
            exec_provable(args[2], args[4], record);
        } else {
            throw ScriptError("unknown assertion '" + kind + "'", record.line);
        }
    }

    void exec_provable(const std::string& name, const std::string& system,
                       ScriptRecord& record) {
        const ScriptEntry& target = lookup(name, record.line);
        const SystemKind sys = parse_system(system);
        const VarContext& ctx = target.form.ctx;

        // Generators: the starting pool (every elemental) plus every
        // derivation product over this context admissible in the system.
        std::vector<std::string> names;
        std::vector<LinForm> forms;
        for (const auto& e : elementals(ctx)) {
            names.push_back(e.description);
            forms.push_back(e.form);
        }
        for (const auto& entry_name : order_) {
            const ScriptEntry& e = entries_.at(entry_name);
            if (e.form.ctx == ctx && admissible(entry_name, sys)) {
                names.push_back(e.name);
                forms.push_back(e.form);
            }
        }

        const std::size_t dim = (std::size_t(1) << ctx.size()) - 1;
        auto densify = [dim](const LinForm& form) {
            std::vector<Rat> v(dim, Rat(0));
            for (const auto& [subset, c] : form.coeff) v[subset - 1] = c;
            return v;
        };
        std::vector<std::vector<Rat>> gens;
        gens.reserve(forms.size());
        for (const auto& f : forms) gens.push_back(densify(f));
        const ConeSolve solved = solve_cone_membership(gens, densify(target.form));

        record.passed = solved.member;
        if (solved.member) {
            std::string combo;
            for (std::size_t i = 0; i < solved.combo.size(); ++i) {
                if (solved.combo[i] == 0) continue;
                if (!combo.empty()) combo += " + ";
                combo += names[i] + ":" + rat_str(solved.combo[i]);
            }
            record.note = "PASS: provable in " + system_name(sys) + " via " +
                          (combo.empty() ? "the empty combination" : combo);
        } else {
            record.note = "FAIL: not in the conic hull of the " + system_name(sys) +
                          " pool (" + std::to_string(forms.size()) + " generators)";
        }
    }

    // ---- helpers ----------------------------------------------------------

    const ScriptEntry& lookup(const std::string& name, int line) const {
        auto it = entries_.find(name);
        if (it == entries_.end())
            throw ScriptError("unknown name '" + name + "'", line);
        return it->second;
    }

    LinForm resolve_form(const std::string& text, int line) {
        const std::string stripped = strip_canonical_wrapper(trim(text));
        if (auto it = entries_.find(stripped); it != entries_.end())
            return it->second.form;
        const CanonResult canon = canonicalize_text(stripped);
        if (canon.secondary)
            throw ScriptError("equalities cannot be compared; state one direction", line);
        return canon.primary;
    }

    LinForm elemental_form(const VarContext& ctx, const std::string& name, int line) {
        for (const auto& e : elementals(ctx))
            if (e.description == name) return e.form;
        throw ScriptError("unknown name '" + name + "' (not a bound name or an elemental " +
                              "of the current context)",
                          line);
    }

    bool shannon_certified(const std::string& name) {
        auto [it, inserted] = shannon_memo_.try_emplace(name, Memo::unknown);
        if (it->second == Memo::unknown)
            it->second = check_shannon(entries_.at(name).form).is_shannon ? Memo::yes
                                                                          : Memo::no;
        return it->second == Memo::yes;
    }

    // Whether `name` could appear in a derivation of the given system:
    // elemental pool members and certified Shannon-type givens are starting
    // material, conic combinations and substitutions preserve admissibility,
    // a rule product needs the system's own rule (and, in a +b system, a
    // balanced result unless followed by an explicit balance step), and
    // balance steps exist only in the +b systems.
    bool admissible(const std::string& name, SystemKind sys) {
        const auto key = std::make_pair(name, sys);
        if (auto it = adm_memo_.find(key); it != adm_memo_.end()) return it->second;
        adm_memo_[key] = false;  // cycle guard; entries form a DAG anyway
        const ScriptEntry& e = entries_.at(name);
        bool ok = false;
        const bool zy_system = sys == SystemKind::zy || sys == SystemKind::zy_b;
        const bool balanced_system = sys == SystemKind::zy_b || sys == SystemKind::r_b;
        auto parents_admissible = [&]() {
            return std::all_of(e.parents.begin(), e.parents.end(),
                               [&](const std::string& p) { return admissible(p, sys); });
        };
        switch (e.prov) {
            case Provenance::elemental:
                ok = true;
                break;
            case Provenance::given:
                ok = shannon_certified(name);
                break;
            case Provenance::combination:
            case Provenance::subst:
                ok = parents_admissible();
                break;
            case Provenance::zy:
                ok = zy_system && parents_admissible() &&
                     (!balanced_system || is_balanced(e.form));
                break;
            case Provenance::mmrv:
                ok = !zy_system && parents_admissible() &&
                     (!balanced_system || is_balanced(e.form));
                break;
            case Provenance::balance: {
                if (!balanced_system) break;
                const ScriptEntry& parent = entries_.at(e.parents.front());
                const bool parent_is_system_rule =
                    (parent.prov == Provenance::zy && zy_system) ||
                    (parent.prov == Provenance::mmrv && !zy_system);
                if (admissible(parent.name, sys)) {
                    ok = true;
                } else if (parent_is_system_rule) {
                    // balance applied right after the rule: exactly the +b
                    // step, so only the rule's premise must be admissible.
                    ok = std::all_of(
                        parent.parents.begin(), parent.parents.end(),
                        [&](const std::string& p) { return admissible(p, sys); });
                }
                break;
            }
        }
        adm_memo_[key] = ok;
        return ok;
    }

    Transcript transcript_;
    std::map<std::string, ScriptEntry> entries_;
    std::vector<std::string> order_;
    std::optional<VarContext> current_ctx_;
    std::map<std::string, Memo> shannon_memo_;
    std::map<std::pair<std::string, SystemKind>, bool> adm_memo_;
};

}  // namespace

Transcript run_script(const std::string& text) {
    return ScriptRun().run(text);
}

std::string transcript_text(const Transcript& t) {
    std::string out;
    int asserts = 0;
    for (const auto& r : t.records) {
        out += "[" + std::to_string(r.line) + "] " + r.text + "\n";
        if (!r.note.empty()) out += "    " + r.note + "\n";
        if (r.is_assert && r.passed) ++asserts;
    }
    switch (t.status) {
        case ScriptStatus::ok:
            out += "RESULT: PASS (" + std::to_string(asserts) + " assertions)\n";
            break;
        case ScriptStatus::assertion_failed:
            out += "RESULT: FAIL (" + t.diagnostic + ")\n";
            break;
        case ScriptStatus::error:
            out += "RESULT: ERROR (" + t.diagnostic + ")\n";
            break;
    }
    return out;
}

}  // namespace entro
