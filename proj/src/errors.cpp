#include "ybe/types.hpp"

#include <cmath>

namespace ybe {

namespace {
std::string config_message(const std::string& field, const std::string& what, int line)
{
    std::string msg = "config";
    if (line > 0) msg += " line " + std::to_string(line);
    if (!field.empty()) msg += " field '" + field + "'";
    return msg + ": " + what;
}
}  // namespace

ConfigError::ConfigError(const std::string& field, const std::string& what, int line)
    : Error(config_message(field, what, line)), field_(field), line_(line)
{
}

Moduli::Moduli(cplx w1, cplx w2) : omega1(w1), omega2(w2)
{
    if (w1 == 0.0 || w2 == 0.0) throw DomainError("moduli must be non-zero");
    if (!is_finite(w1) || !is_finite(w2)) throw DomainError("moduli must be finite");
}

cplx Moduli::Q() const
{
    // b = sqrt(omega2/omega1), principal branch
    cplx b = std::sqrt(b_squared());
    return b + 1.0 / b;
}

bool is_finite(cplx z)
{
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace ybe
