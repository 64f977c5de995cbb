#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace secant {

/// Exact rational arithmetic backend.  Off by default (the prime field is
/// faster and failure-free in practice); selectable through EngineConfig.
class RationalField {
public:
    using Elem = boost::multiprecision::cpp_rational;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const { return 1 / a; }
    Elem from_int(long long v) const { return v; }
};

} // namespace secant
