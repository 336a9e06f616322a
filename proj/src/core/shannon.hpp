#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "core/linform.hpp"

namespace entro {

// The elemental inequalities generate the same cone as all basic instances
// I(X_J;X_K|X_L) >= 0 but there are only n + C(n,2)*2^(n-2) of them:
//   NodeEntropy(i):  H(X_i | X_rest) >= 0
//   PairMI(i,j,K):   I(X_i ; X_j | X_K) >= 0,  K subset of rest, i < j
enum class ElementalKind { node_entropy, pair_mi };

struct Elemental {
    int id;                   // position in the deterministic enumeration
    ElementalKind kind;
    int i = 0, j = 0;         // variable bit positions (j used by pair_mi)
    Mask k = 0;               // conditioning set (pair_mi)
    LinForm form;
    std::string description;  // e.g. "H(A|B,C)", "I(A;B|C)"
};

// Effective LP variable cap: ENTROPROVER_MAX_N clamped to [1, 8], default 8.
int max_lp_n();

// Deterministic order: all NodeEntropy by variable position, then PairMI by
// (i, j) lexicographic with K ascending as a mask.  Throws LimitError unless
// 1 <= n <= max_lp_n().
std::vector<Elemental> elementals(const VarContext& ctx);

// Certificate: target == sum lambda_e * elemental_e.form with lambda_e >= 0
// (entries with lambda = 0 omitted).  Witness: a subset-indexed vector that
// is >= 0 on every elemental form and < 0 on the target.
struct ShannonVerdict {
    bool is_shannon = false;
    std::vector<std::pair<int, Rat>> certificate;  // (elemental id, lambda)
    std::map<Mask, Rat> witness;                   // zero entries omitted
};

// Exact decision (no tolerance): Certificate iff f is a nonnegative
// combination of elementals.  The empty form gets an empty certificate.
ShannonVerdict check_shannon(const LinForm& f);

// Independent exact re-checks of a verdict (false on any mismatch).
bool verify_certificate(const LinForm& target,
                        const std::vector<std::pair<int, Rat>>& cert);
bool verify_witness(const LinForm& target, const std::map<Mask, Rat>& witness);

// Evaluate sum_J w_J * c_J exactly (missing entries count as 0).
Rat witness_value(const LinForm& f, const std::map<Mask, Rat>& witness);

}  // namespace entro
