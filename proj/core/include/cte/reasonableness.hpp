#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace cte {

// Window lengths, in days, standing in for adverbs whose precise meaning a
// court would settle after the fact. Simulations vary these to probe how
// sensitive an agreement is to the ambiguity.
class ReasonablenessConfig {
public:
    ReasonablenessConfig();  // promptly: 1, as soon as reasonably practicable: 2, timely: 1

    std::int64_t window_for(const std::string& adverb) const;  // UnknownName when unconfigured
    bool knows(const std::string& adverb) const { return windows_.count(adverb) != 0; }
    void set(const std::string& adverb, std::int64_t days);

    const std::map<std::string, std::int64_t>& windows() const { return windows_; }

private:
    std::map<std::string, std::int64_t> windows_;
};

}  // namespace cte
