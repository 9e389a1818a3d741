#include "radpot/exponents.hpp"

#include <cmath>
#include <string>

#include "radpot/errors.hpp"

namespace radpot {

ExponentSet derive_exponents(int n, double alpha, double q1, double q2)
{
    if (n < 2)
        throw ParameterError("dimension n must be an integer >= 2, got n = " + std::to_string(n));
    if (!(alpha > 0.0) || !(alpha < 0.5 * n))
        throw ParameterError("alpha must satisfy 0 < alpha < n/2, got alpha = " +
                             std::to_string(alpha));
    if (!(q1 > 0.0) || !(q1 < 1.0))
        throw ParameterError("q1 must lie in (0,1), got q1 = " + std::to_string(q1));
    if (!(q2 > 0.0) || !(q2 < 1.0))
        throw ParameterError("q2 must lie in (0,1), got q2 = " + std::to_string(q2));

    ExponentSet e;
    e.n = n;
    e.alpha = alpha;
    e.q1 = q1;
    e.q2 = q2;
    const double denom = 1.0 - q1 * q2;
    e.gamma1 = (1.0 + q1) / denom;
    e.gamma2 = (1.0 + q2) / denom;
    e.r1 = 1.0 - 1.0 / e.gamma1;
    e.r2 = 1.0 - 1.0 / e.gamma2;
    e.d = n - 2.0 * alpha;

    const double id1 = std::abs(e.gamma1 - (q1 * e.gamma2 + 1.0));
    const double id2 = std::abs(e.gamma2 - (q2 * e.gamma1 + 1.0));
    if (id1 > 1e-12 * e.gamma1 || id2 > 1e-12 * e.gamma2)
        throw ParameterError("exponent identity gamma_i = q_i gamma_j + 1 violated beyond 1e-12");
    return e;
}

} // namespace radpot
