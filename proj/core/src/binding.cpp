#include "cte/binding.hpp"

#include "cte/errors.hpp"

namespace cte {

std::string to_string(BindingSource s) {
    return s == BindingSource::Text ? "text" : "performance";
}

BindingRegistry BindingRegistry::bind(const std::string& name, BindingRecord record) const {
    BindingRegistry next = *this;
    auto& history = next.entries_[name];
    if (!history.empty() && record.bound_at < history.back().bound_at) {
        throw NonMonotonicBinding("binding for " + name + " at " + record.bound_at.iso() +
                                  " predates the last record at " +
                                  history.back().bound_at.iso());
    }
    history.push_back(std::move(record));
    return next;
}

BindingRegistry::Designation BindingRegistry::designation(const std::string& name) const {
    Designation result;
    auto it = entries_.find(name);
    if (it == entries_.end()) return result;
    result.history = it->second;
    for (const BindingRecord& rec : it->second) {
        if (rec.source == BindingSource::Text) result.is_specified = true;
        if (rec.source == BindingSource::Performance) result.has_been_designated = true;
    }
    if (!it->second.empty()) result.current = it->second.back().value;
    return result;
}

const std::vector<BindingRecord>* BindingRegistry::history(const std::string& name) const {
    auto it = entries_.find(name);
    return it == entries_.end() ? nullptr : &it->second;
}

std::vector<std::string> BindingRegistry::names() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& [name, records] : entries_) out.push_back(name);
    return out;
}

}  // namespace cte
