#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace legspec
{

using Real = double;
using Complex = std::complex<double>;
using Index = Eigen::Index;

using RealVector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;

/// Complex-valued function of one real variable.
using ScalarFunction = std::function<Complex(Real)>;

inline constexpr Real kMachineEps = std::numeric_limits<Real>::epsilon();

/// Closed interval [a, b] a function or series lives on.
struct Interval
{
    Real a = -1.0;
    Real b = 1.0;

    [[nodiscard]] Real length() const { return b - a; }
    [[nodiscard]] bool is_reference() const { return a == -1.0 && b == 1.0; }
};

// Error types. Everything derives from std::runtime_error so callers that
// don't care about the category can catch one thing.

struct DomainError : std::domain_error
{
    using std::domain_error::domain_error;
};

struct SizeError : std::invalid_argument
{
    using std::invalid_argument::invalid_argument;
};

/// (I - F) could not be factorized: a pivot fell below the singularity threshold.
struct SingularSystemError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

/// An adaptive or iterative procedure hit its cap before converging.
struct ConvergenceError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

} // namespace legspec
