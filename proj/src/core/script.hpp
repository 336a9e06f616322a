#pragma once

#include <string>
#include <vector>

#include "core/linform.hpp"

namespace entro {

// One executed statement: the source line, and either the derived form
// (rendered) or the assertion verdict.
struct ScriptRecord {
    int line = 0;
    std::string text;   // statement as written (comments stripped)
    std::string note;   // rendered result or assertion detail
    bool is_assert = false;
    bool passed = true;
};

enum class ScriptStatus { ok, assertion_failed, error };

struct Transcript {
    std::vector<ScriptRecord> records;
    ScriptStatus status = ScriptStatus::ok;
    std::string diagnostic;  // set when status != ok
};

// Execute a derivation script.  Statements (line-oriented, "#" comments):
//   let <name> = <inequality-string>
//   let <name> = combo <name>:<rat> [+ <name>:<rat> ...]
//   let <name> = zy <name> z=<var> x={<vars>} y={<vars>}
//   let <name> = mmrv <name> z=<var> x={<vars>} y={<vars>}
//   let <name> = balance <name>
//   let <name> = subst <name> <var>MAPS-TO<var>      (written <var>-><var>)
//   assert shannon <name> | assert not-shannon <name>
//   assert equal <name> <name-or-inequality-string>
//   assert balanced <name> [for <var>]
//   assert provable <name> in <system>               (zy | zy+b | r | r+b)
// Execution stops at the first failed assertion (status assertion_failed)
// or the first malformed/inapplicable statement (status error).
Transcript run_script(const std::string& text);

std::string transcript_text(const Transcript& t);

}  // namespace entro
