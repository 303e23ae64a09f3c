#pragma once

#include <optional>
#include <string>
#include <variant>

#include "cte/binding.hpp"
#include "cte/calendar.hpp"
#include "cte/date_bag.hpp"
#include "cte/date_set.hpp"
#include "cte/formula.hpp"
#include "cte/interval.hpp"
#include "cte/phrase.hpp"
#include "cte/reasonableness.hpp"

namespace cte {

// A named date the registry cannot resolve yet; carry the name so the
// caller can retry once it has been bound or designated.
struct DeferredName {
    std::string name;
};

using CompiledValue =
    std::variant<Day, ContinuousInterval, DateSet, DateBag, Formula, DeferredName>;

struct CompileContext {
    const BindingRegistry* registry = nullptr;
    const PropertyCalendar* calendar = nullptr;
    const ReasonablenessConfig* config = nullptr;
    ContinuousInterval term;  // the agreement term, for period defaults
    bool allow_deferred = false;
};

CompiledValue compile(const PhraseAst& ast, const CompileContext& ctx);
inline CompiledValue compile(const PhrasePtr& ast, const CompileContext& ctx) {
    return compile(*ast, ctx);
}

// Human-readable rendering of a compiled value, used by the CLI.
std::string describe(const CompiledValue& value);

}  // namespace cte
