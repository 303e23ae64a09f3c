#pragma once

#include <stdexcept>
#include <string>

namespace cte {

// Base class for every error raised by the library. Callers that do not
// care about the precise failure can catch this one type.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define CTE_DEFINE_ERROR(Name)                                       \
    class Name : public Error {                                      \
    public:                                                          \
        explicit Name(const std::string& what) : Error(what) {}      \
    }

// Calendar days and arithmetic.
CTE_DEFINE_ERROR(InvalidDate);
CTE_DEFINE_ERROR(ExtremeArithmetic);

// Property calendars.
CTE_DEFINE_ERROR(UnknownProperty);
CTE_DEFINE_ERROR(NoSuchDayWithinHorizon);

// Name binding histories.
CTE_DEFINE_ERROR(NonMonotonicBinding);

// Date sets and bags.
CTE_DEFINE_ERROR(UnboundedGenerator);
CTE_DEFINE_ERROR(NoSucceedingDate);
CTE_DEFINE_ERROR(NotAnAlternative);
CTE_DEFINE_ERROR(AlreadyResolved);

// Formula evaluation.
CTE_DEFINE_ERROR(OutOfHorizon);
CTE_DEFINE_ERROR(UnboundVariable);
CTE_DEFINE_ERROR(IndeterminateBag);

// Lifecycles.
CTE_DEFINE_ERROR(UnknownEvent);
CTE_DEFINE_ERROR(FutureQuery);
CTE_DEFINE_ERROR(MissingDate);
CTE_DEFINE_ERROR(EventDateAlreadySet);
CTE_DEFINE_ERROR(UnknownObligation);
CTE_DEFINE_ERROR(AlreadyDischarged);
CTE_DEFINE_ERROR(DueDateBeforeIncurred);
CTE_DEFINE_ERROR(NonMonotonicRevision);
CTE_DEFINE_ERROR(NoQualifyingObligation);
CTE_DEFINE_ERROR(UnknownRight);
CTE_DEFINE_ERROR(NotActivated);

// Phrase compilation.
CTE_DEFINE_ERROR(UnknownName);
CTE_DEFINE_ERROR(EmptyResult);

// Scenario replay.
CTE_DEFINE_ERROR(ScenarioError);

#undef CTE_DEFINE_ERROR

}  // namespace cte
