#ifndef PDARRAY_ERRORS_HPP
#define PDARRAY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pdarray {

// Raised when an algorithm cannot reach its requested accuracy
// (series non-convergence, quadrature subdivision exhaustion, overflow).
// Domain/usage violations use std::invalid_argument / std::domain_error.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace pdarray

#endif
