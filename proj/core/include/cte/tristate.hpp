#pragma once

#include <string>

namespace cte {

// Three-valued answer for questions that may not be decidable yet, e.g.
// comparisons against an unresolved bag of alternative dates.
enum class TriState { False, True, Indeterminate };

inline TriState to_tristate(bool b) { return b ? TriState::True : TriState::False; }

inline std::string to_string(TriState t) {
    switch (t) {
        case TriState::False: return "false";
        case TriState::True: return "true";
        default: return "indeterminate";
    }
}

}  // namespace cte
