#pragma once

#include <stdexcept>
#include <string>

namespace thermo {

/// Invalid input: a precondition, dimension or domain check failed.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The numerics could not deliver the contract (step underflow, lost branch, ...).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw DomainError(what);
}

}  // namespace thermo
