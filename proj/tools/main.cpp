// Batch command-line front end.  Everything here goes through the public C
// API; no core headers are included.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "entroprover.h"

namespace {

constexpr double kEvalTolerance = 1e-9;

constexpr int kExitValid = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;

// RAII wrappers over the C handles.
struct FormDeleter {
    void operator()(ep_form* f) const { ep_form_free(f); }
};
struct PmfDeleter {
    void operator()(ep_pmf* p) const { ep_pmf_free(p); }
};
using FormPtr = std::unique_ptr<ep_form, FormDeleter>;
using PmfPtr = std::unique_ptr<ep_pmf, PmfDeleter>;

std::string take_string(char* s) {
    std::string out = s ? s : "";
    ep_string_free(s);
    return out;
}

[[noreturn]] void die(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    std::exit(kExitUsage);
}

void require_ok(ep_status st) {
    if (st != EP_OK) die(ep_last_error());
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) die("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Inequality-taking subcommands accept the text inline or via --file.
struct IneqInput {
    std::string inline_text;
    std::string file;

    std::string text() const {
        if (!file.empty()) return read_file(file);
        if (inline_text.empty()) die("no inequality given (inline or --file)");
        return inline_text;
    }
};

void add_ineq_options(CLI::App* sub, IneqInput& input) {
    sub->add_option("ineq", input.inline_text, "inequality text");
    sub->add_option("--file", input.file, "read the inequality from a file");
}

std::string render_of(const ep_form* f) {
    char* s = nullptr;
    require_ok(ep_form_render(f, &s));
    return take_string(s);
}

// Parses the input; for equalities both directions are returned.
std::pair<FormPtr, FormPtr> parse_input(const std::string& text) {
    ep_form* primary = nullptr;
    ep_form* secondary = nullptr;
    require_ok(ep_form_parse(text.c_str(), nullptr, &primary, &secondary));
    return {FormPtr(primary), FormPtr(secondary)};
}

bool structured_report(const std::string& report) {
    if (report == "structured") return true;
    if (report == "text" || report.empty()) return false;
    die("unknown report format: " + report);
}

int cmd_canon(const IneqInput& input, bool structured) {
    auto [primary, secondary] = parse_input(input.text());
    if (structured) {
        nlohmann::json out;
        out["primary"] = render_of(primary.get());
        if (secondary) out["secondary"] = render_of(secondary.get());
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << render_of(primary.get()) << "\n";
        if (secondary) std::cout << render_of(secondary.get()) << "\n";
    }
    return kExitValid;
}

int cmd_balance(const IneqInput& input, bool structured) {
    auto [primary, secondary] = parse_input(input.text());
    if (secondary) die("balance takes a single inequality, not an equality");
    ep_form* balanced_raw = nullptr;
    char* negative_raw = nullptr;
    require_ok(ep_form_balance(primary.get(), &balanced_raw, &negative_raw));
    FormPtr balanced(balanced_raw);
    const std::string negative = take_string(negative_raw);
    if (structured) {
        nlohmann::json out;
        out["balanced"] = render_of(balanced.get());
        out["negative_r"] = nlohmann::json::array();
        std::istringstream names(negative);
        std::string name;
        while (std::getline(names, name, ',')) out["negative_r"].push_back(name);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << render_of(balanced.get()) << "\n";
        if (!negative.empty())
            std::cout << "negative weight on: " << negative << "\n";
    }
    return kExitValid;
}

int cmd_check(const IneqInput& input, bool structured) {
    auto [primary, secondary] = parse_input(input.text());
    bool all_shannon = true;
    std::vector<const ep_form*> directions;
    directions.push_back(primary.get());
    if (secondary) directions.push_back(secondary.get());
    for (const ep_form* f : directions) {
        int is_shannon = 0;
        char* report = nullptr;
        require_ok(ep_form_check(f, structured ? 1 : 0, &is_shannon, &report));
        std::cout << take_string(report);
        if (structured) std::cout << "\n";
        all_shannon = all_shannon && is_shannon != 0;
    }
    return all_shannon ? kExitValid : kExitInvalid;
}

int cmd_rule(bool zy, const IneqInput& input, const std::string& z,
             const std::string& x_csv, const std::string& y_csv,
             bool structured) {
    auto [primary, secondary] = parse_input(input.text());
    if (secondary) die("rules take a single inequality, not an equality");
    ep_form* out_raw = nullptr;
    if (zy)
        require_ok(ep_form_zy(primary.get(), z.c_str(), x_csv.c_str(),
                              y_csv.c_str(), &out_raw));
    else
        require_ok(ep_form_mmrv(primary.get(), z.c_str(), x_csv.c_str(),
                                y_csv.c_str(), &out_raw));
    FormPtr out(out_raw);
    if (structured) {
        nlohmann::json j;
        j["result"] = render_of(out.get());
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << render_of(out.get()) << "\n";
    }
    return kExitValid;
}

int cmd_subst(const IneqInput& input, const std::string& map, bool structured) {
    const auto eq = map.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 >= map.size())
        die("--map expects FROM=TO");
    const std::string from = map.substr(0, eq);
    const std::string to = map.substr(eq + 1);
    auto [primary, secondary] = parse_input(input.text());
    if (secondary) die("subst takes a single inequality, not an equality");
    ep_form* out_raw = nullptr;
    require_ok(ep_form_subst(primary.get(), from.c_str(), to.c_str(), &out_raw));
    FormPtr out(out_raw);
    if (structured) {
        nlohmann::json j;
        j["result"] = render_of(out.get());
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << render_of(out.get()) << "\n";
    }
    return kExitValid;
}

int cmd_eval(const IneqInput& input, const std::string& pmf_path,
             bool structured) {
    const std::string pmf_text = read_file(pmf_path);
    ep_pmf* pmf_raw = nullptr;
    require_ok(ep_pmf_parse(pmf_text.c_str(), &pmf_raw));
    PmfPtr pmf(pmf_raw);
    auto [primary, secondary] = parse_input(input.text());

    std::vector<std::pair<std::string, double>> values;
    for (const ep_form* f :
         secondary ? std::vector<const ep_form*>{primary.get(), secondary.get()}
                   : std::vector<const ep_form*>{primary.get()}) {
        double value = 0.0;
        require_ok(ep_form_eval(f, pmf.get(), &value));
        values.emplace_back(render_of(f), value);
    }
    bool holds = true;
    for (const auto& entry : values)
        holds = holds && entry.second >= -kEvalTolerance;

    if (structured) {
        nlohmann::json j;
        j["holds"] = holds;
        j["values"] = nlohmann::json::array();
        for (const auto& [text, value] : values)
            j["values"].push_back({{"form", text}, {"value", value}});
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& [text, value] : values) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.12g", value);
            std::cout << text << "  evaluates to " << buf << "\n";
        }
        std::cout << (holds ? "holds" : "violated") << "\n";
    }
    return holds ? kExitValid : kExitInvalid;
}

int cmd_copy(const std::string& pmf_path, const std::string& a,
             const std::string& b_csv, const std::string& c_csv,
             bool structured) {
    const std::string pmf_text = read_file(pmf_path);
    ep_pmf* pmf_raw = nullptr;
    require_ok(ep_pmf_parse(pmf_text.c_str(), &pmf_raw));
    PmfPtr pmf(pmf_raw);
    ep_pmf* out_raw = nullptr;
    require_ok(ep_pmf_copy_var(pmf.get(), a.c_str(), b_csv.c_str(),
                               c_csv.c_str(), &out_raw));
    PmfPtr out(out_raw);
    char* rendered = nullptr;
    require_ok(ep_pmf_render(out.get(), &rendered));
    const std::string text = take_string(rendered);
    if (structured) {
        nlohmann::json j;
        j["pmf"] = text;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << text;
    }
    return kExitValid;
}

int cmd_run(const std::string& path, bool structured) {
    const std::string text = read_file(path);
    int outcome = 0;
    char* transcript = nullptr;
    const ep_status st =
        ep_run_script(text.c_str(), structured ? 1 : 0, &outcome, &transcript);
    if (st != EP_OK) die(ep_last_error());
    std::cout << take_string(transcript);
    if (structured) std::cout << "\n";
    return outcome == 0 ? kExitValid : kExitInvalid;
}

int cmd_elementals(int n, bool structured) {
    char* out = nullptr;
    require_ok(ep_elementals(n, structured ? 1 : 0, &out));
    std::cout << take_string(out);
    if (structured) std::cout << "\n";
    return kExitValid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"entroprover — symbolic prover for linear entropy inequalities"};
    app.require_subcommand(1);
    std::string report = "text";
    app.add_option("--report", report, "output format: text (default) or structured");

    IneqInput canon_in, balance_in, check_in, zy_in, mmrv_in, subst_in, eval_in;
    std::string zy_z, zy_x, zy_y;
    std::string mmrv_z, mmrv_x, mmrv_y;
    std::string subst_map;
    std::string eval_pmf, copy_pmf, copy_a, copy_b, copy_c, run_path;
    int elem_n = 0;

    CLI::App* canon = app.add_subcommand("canon", "canonical joint-entropy form");
    add_ineq_options(canon, canon_in);

    CLI::App* balance = app.add_subcommand("balance", "balance the inequality");
    add_ineq_options(balance, balance_in);

    CLI::App* check =
        app.add_subcommand("check", "Shannon-type membership with certificate or witness");
    add_ineq_options(check, check_in);

    CLI::App* zy = app.add_subcommand("zy", "apply the copy-step inference rule");
    add_ineq_options(zy, zy_in);
    zy->add_option("--z", zy_z, "copied variable")->required();
    zy->add_option("--x", zy_x, "X group, comma-separated")->required();
    zy->add_option("--y", zy_y, "Y group, comma-separated");

    CLI::App* mmrv =
        app.add_subcommand("mmrv", "apply the conditional-entropy inference rule");
    add_ineq_options(mmrv, mmrv_in);
    mmrv->add_option("--z", mmrv_z, "copied variable")->required();
    mmrv->add_option("--x", mmrv_x, "X group, comma-separated")->required();
    mmrv->add_option("--y", mmrv_y, "Y group, comma-separated");

    CLI::App* subst = app.add_subcommand("subst", "rename or merge a variable");
    add_ineq_options(subst, subst_in);
    subst->add_option("--map", subst_map, "FROM=TO")->required();

    CLI::App* eval = app.add_subcommand("eval", "evaluate on a distribution");
    add_ineq_options(eval, eval_in);
    eval->add_option("--pmf", eval_pmf, "pmf file")->required();

    CLI::App* copy = app.add_subcommand("copy", "adjoin a conditionally independent copy");
    copy->add_option("--pmf", copy_pmf, "pmf file")->required();
    copy->add_option("--a", copy_a, "variable to copy")->required();
    copy->add_option("--b", copy_b, "conditioning variables, comma-separated");
    copy->add_option("--c", copy_c, "remaining variables, comma-separated");

    CLI::App* run = app.add_subcommand("run", "run a derivation script");
    run->add_option("script", run_path, "script file")->required();

    CLI::App* elementals =
        app.add_subcommand("elementals", "list the elemental inequalities");
    elementals->add_option("--n", elem_n, "number of variables")->required();

    for (CLI::App* sub : {canon, balance, check, zy, mmrv, subst, eval, copy,
                          run, elementals})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const bool structured = structured_report(report);
    if (canon->parsed()) return cmd_canon(canon_in, structured);
    if (balance->parsed()) return cmd_balance(balance_in, structured);
    if (check->parsed()) return cmd_check(check_in, structured);
    if (zy->parsed()) return cmd_rule(true, zy_in, zy_z, zy_x, zy_y, structured);
    if (mmrv->parsed())
        return cmd_rule(false, mmrv_in, mmrv_z, mmrv_x, mmrv_y, structured);
    if (subst->parsed()) return cmd_subst(subst_in, subst_map, structured);
    if (eval->parsed()) return cmd_eval(eval_in, eval_pmf, structured);
    if (copy->parsed())
        return cmd_copy(copy_pmf, copy_a, copy_b, copy_c, structured);
    if (run->parsed()) return cmd_run(run_path, structured);
    if (elementals->parsed()) return cmd_elementals(elem_n, structured);
    die("no subcommand given");
}
