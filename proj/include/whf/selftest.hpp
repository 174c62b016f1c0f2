#pragma once

#include <string>
#include <vector>

namespace whf {

struct SelfTestCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Quick consistency checks at small sizes (well under a second).
std::vector<SelfTestCheck> run_selftest();

} // namespace whf
