#include "omzv/chain_integral.hpp"

#include "omzv/errors.hpp"

#include <cmath>
#include <numbers>

namespace omzv {

namespace {

constexpr int kMaxHalfCount = 200000;

cdouble sum(std::span<const cdouble> v) {
    cdouble s = 0.0;
    for (cdouble x : v) s += x;
    return s;
}

double l1(std::span<const cdouble> v) {
    double s = 0.0;
    for (cdouble x : v) s += std::abs(x);
    return s;
}

}  // namespace

ChainGrid ChainGrid::coarsened() const {
    if (half_count % 2 != 0) throw DomainError("coarsening needs an even half count");
    return ChainGrid{eps, 2.0 * step, half_count / 2};
}

ChainGrid make_chain_grid(double eps, double pole_distance, double half_width, double tol) {
    if (!(eps > 0)) throw DomainError("contour offset must be positive");
    if (!(pole_distance > 0)) throw PoleError("contour touches a singularity of the integrand");
    if (!(half_width > 0)) throw DomainError("window must be positive");
    const double h = 2.0 * std::numbers::pi * 0.8 * pole_distance / (std::log(1.0 / tol) + 2.0);
    int half = static_cast<int>(std::ceil(half_width / h));
    half += half % 2;
    if (half > kMaxHalfCount)
        throw ConvergenceError("grid of " + std::to_string(2 * half + 1) + " points exceeds the limit; the contour is too close to a pole");
    return ChainGrid{eps, h, half};
}

std::vector<cdouble> toeplitz_apply(std::span<const cdouble> kernel, std::span<const cdouble> v) {
    const std::size_t n = v.size();
    if (kernel.size() != 2 * n - 1) throw DomainError("Toeplitz kernel has the wrong length");
    // Reversed split kernel makes the inner loop a contiguous dot product.
    std::vector<double> kr(2 * n - 1), ki(2 * n - 1), vr(n), vi(n);
    for (std::size_t m = 0; m < 2 * n - 1; ++m) {
        kr[m] = kernel[2 * n - 2 - m].real();
        ki[m] = kernel[2 * n - 2 - m].imag();
    }
    for (std::size_t j = 0; j < n; ++j) {
        vr[j] = v[j].real();
        vi[j] = v[j].imag();
    }
    std::vector<cdouble> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double* ar = kr.data() + (n - 1 - i);
        const double* ai = ki.data() + (n - 1 - i);
        double re = 0.0, im = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            re += ar[j] * vr[j] - ai[j] * vi[j];
            im += ar[j] * vi[j] + ai[j] * vr[j];
        }
        out[i] = {re, im};
    }
    return out;
}

std::vector<std::vector<cdouble>> chain_vectors(std::span<const ChainStep> steps, const ChainGrid& grid) {
    if (steps.empty()) throw DomainError("empty chain");
    const int n = grid.size();
    const cdouble weight(0.0, grid.step);
    std::vector<std::vector<cdouble>> out;
    out.reserve(steps.size());

    std::vector<cdouble> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const cdouble T = grid.point(1, i);
        v[static_cast<std::size_t>(i)] = steps[0].increment(T) * steps[0].partial(T) * weight;
    }
    out.push_back(v);

    for (std::size_t a = 1; a < steps.size(); ++a) {
        std::vector<cdouble> kernel(static_cast<std::size_t>(2 * n - 1));
        for (int m = 0; m < 2 * n - 1; ++m)
            kernel[static_cast<std::size_t>(m)] = steps[a].increment(cdouble(-grid.eps, (m - (n - 1)) * grid.step)) * weight;
        v = toeplitz_apply(kernel, v);
        const int depth = static_cast<int>(a) + 1;
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] *= steps[a].partial(grid.point(depth, i));
        out.push_back(v);
    }
    return out;
}

ChainGrid inner_grid(const ChainGrid& grid) {
    return ChainGrid{grid.eps, grid.step, static_cast<int>(std::lround(kInnerFraction * grid.half_count))};
}

ChainErrors chain_errors(const ChainRuns& runs, const ChainGrid& grid, double pole_distance, double decay) {
    ChainErrors e;
    // Halving the step shrinks the error by e^{-pi d/h} 2^{1-k}; the extra
    // factor 4 is a safety margin.
    e.discretization = std::abs(runs.fine - runs.coarse) * std::exp(-std::numbers::pi * pole_distance / grid.step) *
                       std::ldexp(1.0, runs.pole_order + 1);
    // The neglected tail beyond U is the tail beyond the shrunk window damped
    // over the remaining stretch.
    const double stretch = (1.0 - kInnerFraction) * grid.half_count * grid.step;
    const double damping = std::exp(-decay * stretch);
    e.truncation = std::abs(runs.fine - runs.inner) * damping / (1.0 - damping);
    e.roundoff = 4e-16 * std::sqrt(static_cast<double>(grid.size())) * runs.l1 * runs.steps;
    return e;
}

double chain_half_width(const ChainSpec& spec, const QuadConfig& cfg) {
    return cfg.half_width > 0 ? cfg.half_width : window_for(spec.decay, cfg.tol());
}

EvalResult integrate_chain(std::span<const ChainStep> steps, const ChainSpec& spec, const QuadConfig& cfg) {
    cfg.validate();
    const ChainGrid grid = make_chain_grid(spec.eps, spec.pole_distance, chain_half_width(spec, cfg), cfg.tol());
    const auto fine = chain_vectors(steps, grid);
    ChainRuns runs;
    runs.fine = sum(fine.back());
    runs.coarse = sum(chain_vectors(steps, grid.coarsened()).back());
    runs.inner = sum(chain_vectors(steps, inner_grid(grid)).back());
    runs.l1 = l1(fine.back());
    runs.steps = static_cast<int>(steps.size());
    runs.pole_order = spec.pole_order;
    const ChainErrors err = chain_errors(runs, grid, spec.pole_distance, spec.decay);
    const cdouble value = runs.fine;

    QuadMeta meta;
    meta.eps.assign(steps.size(), spec.eps);
    meta.half_width = grid.half_count * grid.step;
    meta.nodes = static_cast<std::size_t>(grid.size()) * steps.size();
    meta.step = grid.step;
    return EvalResult{value, err.total(), meta};
}

}  // namespace omzv
