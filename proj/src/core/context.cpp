#include "core/context.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "core/errors.hpp"

namespace entro {

bool is_identifier(const std::string& name) {
    if (name.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

VarContext::VarContext(std::vector<std::string> names_in) : names(std::move(names_in)) {
    // An empty context is allowed: it carries the tautology 0 >= 0.
    if (size() > kMaxContextSize)
        throw LimitError("variable context larger than " + std::to_string(kMaxContextSize) +
                         " variables");
    std::set<std::string> seen;
    for (const auto& name : names) {
        if (!is_identifier(name))
            throw ParseError("invalid variable name '" + name + "'");
        if (!seen.insert(name).second)
            throw ParseError("duplicate variable name '" + name + "'");
    }
}

bool VarContext::has(const std::string& name) const {
    return std::find(names.begin(), names.end(), name) != names.end();
}

int VarContext::index_of(const std::string& name) const {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end())
        throw UnknownVariableError("unknown variable '" + name + "'");
    return static_cast<int>(it - names.begin());
}

Mask VarContext::subset_mask(const std::vector<std::string>& vars) const {
    Mask m = 0;
    for (const auto& v : vars) m |= bit(v);
    return m;
}

std::vector<std::string> VarContext::subset_names(Mask subset) const {
    std::vector<std::string> out;
    for (int i = 0; i < size(); ++i)
        if (subset & (Mask(1) << i)) out.push_back(names[i]);
    return out;
}

std::string VarContext::subset_label(Mask subset) const {
    std::string out;
    bool first = true;
    for (const auto& name : subset_names(subset)) {
        if (!first) out += ',';
        out += name;
        first = false;
    }
    return out;
}

}  // namespace entro
