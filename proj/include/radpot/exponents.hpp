#pragma once

namespace radpot {

/// The system's exponent data: dimension n, fractional order alpha, the
/// sublinear powers q1, q2 and the derived growth exponents
///   gamma_i = (1 + q_i) / (1 - q1 q2),   r_i = 1 - 1/gamma_i,
/// plus the kernel exponent d = n - 2 alpha.
struct ExponentSet {
    int n = 3;
    double alpha = 1.0;
    double q1 = 0.5;
    double q2 = 0.5;
    double gamma1 = 2.0;
    double gamma2 = 2.0;
    double r1 = 0.5;
    double r2 = 0.5;
    double d = 1.0;

    double gamma(int i) const { return i == 1 ? gamma1 : gamma2; }
    double r(int i) const { return i == 1 ? r1 : r2; }
    double q(int i) const { return i == 1 ? q1 : q2; }
};

/// Validates 0 < alpha < n/2, q1, q2 in (0,1), n >= 2, derives the gammas
/// and r's and enforces the identities gamma1 = q1 gamma2 + 1 and
/// gamma2 = q2 gamma1 + 1 to 1e-12. Throws ParameterError naming the
/// violated bound.
ExponentSet derive_exponents(int n, double alpha, double q1, double q2);

} // namespace radpot
