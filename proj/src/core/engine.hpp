#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/linform.hpp"
#include "core/rules.hpp"

namespace entro {

// How a pool entry came to exist.
enum class Provenance { elemental, given, zy, mmrv, balance, subst, combination };

// The four proof systems: which rule a step applies, and whether every step's
// conclusion is balanced before entering the pool ("+b").
enum class SystemKind { zy, zy_b, r, r_b };

SystemKind parse_system(const std::string& name);  // "zy"|"zy+b"|"r"|"r+b"
std::string system_name(SystemKind kind);

struct PoolEntry {
    std::string name;
    LinForm form;
    Provenance prov = Provenance::given;
    std::vector<int> parents;             // indices of picked entries
    std::optional<Partition> partition;   // for zy/mmrv steps
};

// An ordered, name-indexed pool of inequalities over one context.  Entries
// are deduplicated by canonical form equality: adding a form that is already
// present is a no-op that reports the existing entry.
struct Pool {
    VarContext ctx;
    std::vector<PoolEntry> entries;
    std::map<std::string, int> by_name;

    const PoolEntry& at(const std::string& name) const;  // throws ScriptError
    bool has(const std::string& name) const { return by_name.count(name) != 0; }
    // Index of an entry with this exact form, or -1.
    int find_form(const LinForm& form) const;
    // Returns the entry index: the existing one on deduplication, otherwise
    // the appended one.  Throws ScriptError on a name collision.
    int add(PoolEntry entry);
};

// Pool seeded with all elemental inequalities, named by their descriptions
// ("H(A|B,C)", "I(A;B|C)", ...).  Throws LimitError via elementals().
Pool init_pool(const VarContext& ctx);

// Conic combination sum lambda_i * form_i of named entries; lambdas must be
// >= 0 and names known.
LinForm pick(const Pool& pool, const std::vector<std::pair<std::string, Rat>>& combo);

// One derivation step: pick a premise from the pool's conic closure, apply
// the system's rule (zy for systems zy/zy+b, mmrv for r/r+b), balance the
// conclusion for the +b systems, and append it under `name` (auto-named
// "d1", "d2", ... when empty).  Returns the extended pool.
Pool step(const Pool& pool, SystemKind kind,
          const std::vector<std::pair<std::string, Rat>>& combo,
          const Partition& partition, const std::string& name = "");

// Exact conic-hull membership of `target` in the pool.
struct ProvableResult {
    bool provable = false;
    std::vector<std::pair<std::string, Rat>> combination;  // entry name -> lambda
    std::map<Mask, Rat> witness;                           // separating vector
};

ProvableResult provable(const Pool& pool, const LinForm& target);

}  // namespace entro
