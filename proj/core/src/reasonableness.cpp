#include "cte/reasonableness.hpp"

#include "cte/errors.hpp"

namespace cte {

ReasonablenessConfig::ReasonablenessConfig() {
    windows_["promptly"] = 1;
    windows_["as soon as reasonably practicable"] = 2;
    windows_["timely"] = 1;
}

std::int64_t ReasonablenessConfig::window_for(const std::string& adverb) const {
    auto it = windows_.find(adverb);
    if (it != windows_.end()) return it->second;
    // Multiword reasonableness phrases fall back to the generic
    // practicability window.
    it = windows_.find("as soon as reasonably practicable");
    if (adverb.find(' ') != std::string::npos && it != windows_.end()) return it->second;
    throw UnknownName("no reasonableness window configured for \"" + adverb + "\"");
}

void ReasonablenessConfig::set(const std::string& adverb, std::int64_t days) {
    if (days < 0) {
        throw InvalidDate("reasonableness window must be non-negative, got " +
                          std::to_string(days));
    }
    windows_[adverb] = days;
}

}  // namespace cte
