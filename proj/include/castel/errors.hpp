#pragma once

#include <stdexcept>
#include <string>

namespace castel {

// precondition violation; the CLI maps this to exit code 2
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

struct UnknownFixtureError : std::runtime_error {
    explicit UnknownFixtureError(const std::string& name)
        : std::runtime_error("unknown fixture: " + name) {}
};

}  // namespace castel
