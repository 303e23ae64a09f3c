#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "cte/date_bag.hpp"
#include "cte/day.hpp"

namespace cte {

enum class BindingSource { Text, Performance };

std::string to_string(BindingSource s);

using BoundValue = std::variant<Day, DateBag>;

struct BindingRecord {
    BoundValue value;
    Day bound_at;
    std::string bound_by;
    std::string reason;
    BindingSource source = BindingSource::Text;
    std::set<std::string> properties;
};

// Name -> append-only history of date bindings. A later designation never
// erases the earlier value; "current" is simply the last record.
class BindingRegistry {
public:
    BindingRegistry() = default;

    // Returns a registry with the record appended to the name's history.
    // boundAt must not regress within one history.
    BindingRegistry bind(const std::string& name, BindingRecord record) const;

    struct Designation {
        bool is_specified = false;        // any record from the legal text
        bool has_been_designated = false; // any record set during performance
        std::optional<BoundValue> current;
        std::vector<BindingRecord> history;  // oldest first
    };
    Designation designation(const std::string& name) const;

    bool has(const std::string& name) const { return entries_.count(name) != 0; }
    const std::vector<BindingRecord>* history(const std::string& name) const;
    std::vector<std::string> names() const;  // ascending

private:
    std::map<std::string, std::vector<BindingRecord>> entries_;
};

inline BindingRegistry bind_name(const BindingRegistry& reg, const std::string& name,
                                 BindingRecord record) {
    return reg.bind(name, std::move(record));
}

inline BindingRegistry::Designation designation_queries(const BindingRegistry& reg,
                                                        const std::string& name) {
    return reg.designation(name);
}

}  // namespace cte
