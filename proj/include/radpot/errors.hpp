#pragma once

#include <stdexcept>
#include <string>

namespace radpot {

/// Invalid exponents, measure components or configuration values.
class ParameterError : public std::invalid_argument {
public:
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/// No lambda in the search lattice satisfies the sub/supersolution property.
class CalibrationError : public std::runtime_error {
public:
    explicit CalibrationError(const std::string& what) : std::runtime_error(what) {}
};

/// Iterates exceeded the overflow guard; carries the offending radius.
class DivergenceError : public std::runtime_error {
public:
    DivergenceError(const std::string& what, double radius)
        : std::runtime_error(what), radius_(radius) {}
    double radius() const { return radius_; }
private:
    double radius_;
};

/// I_{2a} mu is not dominated by I_{2a} sigma.
class DominationError : public std::runtime_error {
public:
    DominationError(const std::string& what, double measured_ratio)
        : std::runtime_error(what), ratio_(measured_ratio) {}
    double measured_ratio() const { return ratio_; }
private:
    double ratio_;
};

/// A grid point where a required potential value is infinite.
class SeedError : public std::runtime_error {
public:
    SeedError(const std::string& what, double radius)
        : std::runtime_error(what), radius_(radius) {}
    double radius() const { return radius_; }
private:
    double radius_;
};

} // namespace radpot
