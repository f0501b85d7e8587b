#pragma once

#include <stdexcept>
#include <string>

namespace grasspack {

// Base class for all errors raised by this library.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Operand shapes are incompatible.
struct dimension_error : error {
    explicit dimension_error(const std::string& what) : error(what) {}
};

// Input violates a rank precondition (rank-deficient generator, non-spanning domain).
struct rank_error : error {
    explicit rank_error(const std::string& what) : error(what) {}
};

// A value left the ring Z[1/sqrt(2)]; indicates an internal invariant violation
// or an input outside the supported families.
struct ring_error : error {
    explicit ring_error(const std::string& what) : error(what) {}
};

// An enumeration exceeded its configured size limit.
struct limit_error : error {
    explicit limit_error(const std::string& what) : error(what) {}
};

}  // namespace grasspack
