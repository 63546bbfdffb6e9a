#pragma once

#include <stdexcept>
#include <string>

namespace pathcat {

// Thrown when an operation's precondition fails (bad vertex, out-of-range
// cut, non-composable morphisms, ...). The CLI maps this to exit code 2.
class invalid_input : public std::runtime_error {
public:
    explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

} // namespace pathcat
