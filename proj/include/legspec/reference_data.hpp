#pragma once

#include <array>

#include "legspec/types.hpp"

// Reference numbers for the built-in problems, used by the
// acceptance run and `legspec reproduce`.
namespace legspec::reference
{

struct ToyRow
{
    Real omega;
    Real beta;
    Index M;
    Real coefficient_sum;
    Real nu;
    Real err_f;
    Real max_err_c;
};

inline constexpr std::array<ToyRow, 3> kToy = {{
    {5, 10, 100, 1.0909, 0.2151, 1.3345e-15, 1.7828e-15},
    {5, 1, 100, 10.909, 2.151, 1.8621e-15, 2.5823e-15},
    {100, 1, 1500, 796.7, 45.11, 9.9812e-14, 3.6107e-14},
}};

inline constexpr Index kToyHighOmegaBandwidth = 148;

struct PolynomialRow
{
    Real t_end;
    Index M;
    Real coefficient_sum;
    Real nu;
    Real err_c;
    Real err_f;
};

inline constexpr std::array<PolynomialRow, 2> kPolynomial = {{
    {25, 1000, 348.5, 147.6, 5.228e-14, 1.067e-13},
    {50, 1000, 1394, 590.6, 3.210e-13, 3.008e-13},
}};

/// Convergence in M; last_coeff is |c_hat| at 0-based index M - 2.
struct ConvergenceRow
{
    Index M;
    Real err_f;
    Real last_coeff;
};

inline constexpr std::array<ConvergenceRow, 11> kConvergence25 = {{
    {200, 1.8e+00, 2.7e-02},
    {210, 3.3e-01, 1.3e-02},
    {220, 1.6e-02, 1.9e-03},
    {230, 4.6e-04, 9.0e-05},
    {240, 8.0e-06, 2.2e-06},
    {250, 8.5e-08, 2.9e-08},
    {260, 5.9e-10, 2.4e-10},
    {270, 2.8e-12, 1.2e-12},
    {280, 9.9e-14, 2.1e-14},
    {290, 8.4e-14, 1.2e-14},
    {300, 8.7e-14, 1.2e-14},
}};

inline constexpr std::array<ConvergenceRow, 11> kConvergence50 = {{
    {830, 8.3e-02, 2.4e-03},
    {840, 1.1e-02, 5.5e-04},
    {850, 1.1e-03, 8.4e-05},
    {860, 9.9e-05, 9.3e-06},
    {870, 7.0e-06, 8.0e-07},
    {880, 4.0e-07, 5.4e-08},
    {890, 1.9e-08, 3.0e-09},
    {900, 7.7e-10, 1.3e-10},
    {910, 2.6e-11, 5.0e-12},
    {920, 9.6e-13, 1.6e-13},
    {930, 3.1e-13, 1.6e-14},
}};

/// Machine-precision bandwidths of -i sin(omega (t + 1)).
inline constexpr Index kBandwidthOmega1 = 14;
inline constexpr Index kBandwidthOmega5 = 24;

/// -i sin(t + 1), M = 50: band of I - F (as N + 2), of its inverse, and of
/// the trailing Schur block inverse; predicted and observed accurate entries.
struct StructureRow
{
    Index band_plus_two;
    Index K;
    Index L;
    Index predicted;
    Index observed;
};

inline constexpr StructureRow kStructure = {16, 22, 16, 12, 30};

struct NmrRow
{
    Real nu;
    Index split;
    Index M;
    Real err_f;
};

inline constexpr std::array<NmrRow, 2> kNmr = {{
    {5000, 1, 1500, 1.5994e-4},
    {120000, 20, 1500, 1.4101e-7},
}};

} // namespace legspec::reference
