#pragma once

// Error types shared across the library.  Precondition violations throw
// std::invalid_argument or std::domain_error; precision_exhausted signals
// that a p-adic computation cannot certify any digit of its result.

#include <stdexcept>
#include <string>

namespace tbm {

class precision_exhausted : public std::runtime_error {
public:
    explicit precision_exhausted(const std::string& what)
        : std::runtime_error(what) {}
};

} // namespace tbm
