#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace ybe {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr cplx kI{0.0, 1.0};

// Base class so callers can catch everything the library throws in one place.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// argument sits on (or within 1e-10 of) a pole
class PoleError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class NoConvergence : public Error {
public:
    using Error::Error;
};

// integrand still too large at the window edge
class TailTooFat : public Error {
public:
    using Error::Error;
};

// Configuration problems carry a field path and, when known, a line number.
class ConfigError : public Error {
public:
    ConfigError(const std::string& field, const std::string& what, int line = 0);
    const std::string& field() const { return field_; }
    int line() const { return line_; }

private:
    std::string field_;
    int line_;
};

// Pair of periods for the hyperbolic gamma function.
struct Moduli {
    cplx omega1{1.0, 0.0};
    cplx omega2{1.0, 0.0};

    Moduli() = default;
    Moduli(cplx w1, cplx w2);

    cplx two_eta() const { return omega1 + omega2; }
    cplx eta() const { return 0.5 * (omega1 + omega2); }
    cplx b_squared() const { return omega2 / omega1; }
    cplx Q() const;
};

// Value with an absolute error estimate, the currency of sums and integrals.
struct Estimate {
    cplx value{0.0, 0.0};
    double err = 0.0;
};

bool is_finite(cplx z);

}  // namespace ybe
