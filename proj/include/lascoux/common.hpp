#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace lascoux {

/// Arbitrary-precision signed integer used for all polynomial coefficients.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when a certified polynomial identity fails to hold.
struct IdentityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised by the basis-expansion oracle when the input is not expressible
/// with coefficients in Z>=0[beta].
struct BasisError : std::runtime_error {
    enum class Kind { NotInSpan, NegativeCoefficient };
    Kind kind;
    BasisError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

namespace detail {

/// Precondition on caller-supplied data.
inline void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

/// Internal invariant; a failure means a bug, not bad input.
inline void ensure(bool cond, const char* msg) {
    if (!cond) throw std::logic_error(msg);
}

} // namespace detail
} // namespace lascoux
