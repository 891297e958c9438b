#pragma once

#include <stdexcept>
#include <string>

namespace mbgamma {

/// A truncated series was asked for a coefficient it does not carry exactly.
class TruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Series inversion with a vanishing leading coefficient.
class NotInvertibleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Argument outside the region where a routine is defined.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Evaluation requested at (or too close to) a pole.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A quadrature self-check did not reach its tolerance.
class AccuracyError : public std::runtime_error {
public:
    AccuracyError(const std::string& what, double achieved)
        : std::runtime_error(what + " (achieved " + std::to_string(achieved) + ")"),
          achieved_(achieved) {}

    double achieved() const noexcept { return achieved_; }

private:
    double achieved_;
};

}  // namespace mbgamma
