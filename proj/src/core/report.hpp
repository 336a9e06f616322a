#pragma once

#include <string>

#include "core/script.hpp"
#include "core/shannon.hpp"

namespace entro {

// Deterministic human-readable and machine-readable presentations of the
// library's verdicts.  Subset lists are ordered size-then-lexicographic
// everywhere so outputs are byte-stable.

std::string check_report_text(const LinForm& target, const ShannonVerdict& v);
std::string check_report_json(const LinForm& target, const ShannonVerdict& v);

std::string transcript_json(const Transcript& t);

std::string elementals_text(const VarContext& ctx);
std::string elementals_json(const VarContext& ctx);

}  // namespace entro
