#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace entro {

// Nonempty variable subsets are bitmasks over the context's name order:
// variable at position i of VarContext::names occupies bit i.  Bitmasks make
// subset union/intersection O(1), which the balancing transformation and the
// rule decompositions rely on.
using Mask = std::uint32_t;

// Hard cap on the number of jointly handled variables.  2^n - 1 subset
// coordinates stay desk-scale; the LP layer applies a tighter cap of its own.
inline constexpr int kMaxContextSize = 16;

bool is_identifier(const std::string& name);

// Ordered list of distinct variable names defining the ground set.
struct VarContext {
    std::vector<std::string> names;

    VarContext() = default;
    // Validates: every name matches [A-Za-z][A-Za-z0-9_]*, names unique,
    // 1 <= count <= kMaxContextSize.
    explicit VarContext(std::vector<std::string> names_in);

    int size() const { return static_cast<int>(names.size()); }
    Mask full_mask() const { return static_cast<Mask>((1u << names.size()) - 1u); }

    bool has(const std::string& name) const;
    // Bit position of `name`; throws UnknownVariableError.
    int index_of(const std::string& name) const;

    Mask bit(const std::string& name) const { return Mask(1) << index_of(name); }
    // Mask of a name list; throws UnknownVariableError on unknown names.
    Mask subset_mask(const std::vector<std::string>& vars) const;

    // Names of a subset in context order.
    std::vector<std::string> subset_names(Mask subset) const;
    // Comma-separated names, e.g. "A,C".
    std::string subset_label(Mask subset) const;

    bool operator==(const VarContext&) const = default;
};

inline int popcount(Mask m) { return __builtin_popcount(m); }

}  // namespace entro
