#pragma once

#include "omzv/contour_quad.hpp"

#include <functional>
#include <span>
#include <vector>

namespace omzv {

// Iterated integrals of the form
//   prod_a int_{-eps+iR} dt_a  increment_a(t_a) * partial_a(t_1 + ... + t_a)
// evaluated by the trapezoidal rule in the partial sums T_a, which live on
// the lines Re T = -a*eps. All lines share one uniform grid in Im T, so each
// step is a Toeplitz matrix-vector product.
struct ChainStep {
    std::function<cdouble(cdouble)> increment;
    std::function<cdouble(cdouble)> partial;
};

struct ChainGrid {
    double eps = 0.0;
    double step = 0.0;
    int half_count = 0;

    int size() const noexcept { return 2 * half_count + 1; }
    double y(int i) const noexcept { return (i - half_count) * step; }
    // Point of index i on the line of partial sums of the given depth.
    cdouble point(int depth, int i) const noexcept { return {-depth * eps, y(i)}; }
    // Every other point; requires an even half_count.
    ChainGrid coarsened() const;
};

struct ChainSpec {
    double eps = 0.0;
    // Distance from the contours to the nearest singularity of the integrand.
    double pole_distance = 0.0;
    // Exponential decay rate of the integrand along the lines.
    double decay = 0.0;
    // Highest order of the nearest poles; a pole of order k adds a factor
    // h^{1-k} to the trapezoidal error.
    int pole_order = 1;
};

// Step chosen so that the trapezoidal error exp(-2 pi d / h) falls below tol.
ChainGrid make_chain_grid(double eps, double pole_distance, double half_width, double tol);

// Weighted vectors after each step; the last one carries every variable but
// T_r integrated out, so its sum is the integral.
std::vector<std::vector<cdouble>> chain_vectors(std::span<const ChainStep> steps, const ChainGrid& grid);

struct ChainErrors {
    double discretization = 0.0;
    double truncation = 0.0;
    double roundoff = 0.0;
    double total() const noexcept { return discretization + truncation + roundoff; }
};

// Error of a grid functional from three runs: the fine grid, the coarsened
// grid, and the fine step on a window shrunk by kInnerFraction.
inline constexpr double kInnerFraction = 0.8;

struct ChainRuns {
    cdouble fine;
    cdouble coarse;
    cdouble inner;
    double l1 = 0.0;  // sum of |terms| of the fine run
    int steps = 1;
    int pole_order = 1;
};

ChainErrors chain_errors(const ChainRuns& runs, const ChainGrid& grid, double pole_distance, double decay);

// Same step and offset, window shrunk to kInnerFraction.
ChainGrid inner_grid(const ChainGrid& grid);

double chain_half_width(const ChainSpec& spec, const QuadConfig& cfg);

EvalResult integrate_chain(std::span<const ChainStep> steps, const ChainSpec& spec, const QuadConfig& cfg);

// out[i] = sum_j kernel[i - j + n - 1] * v[j], kernel of length 2n - 1.
std::vector<cdouble> toeplitz_apply(std::span<const cdouble> kernel, std::span<const cdouble> v);

}  // namespace omzv
