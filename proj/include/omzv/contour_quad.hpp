#pragma once

#include <complex>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace omzv {

using cdouble = std::complex<double>;

struct QuadConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-13;
    // Imaginary-part truncation of each line; 0 derives it from the decay rate.
    double half_width = 0.0;
    int panel_order = 20;
    int max_panels = 1 << 14;
    int max_dim = 6;
    // Real-part offset of the contours; 0 selects the caller's default.
    double eps = 0.0;

    void validate() const;
    // Canonical text of every field, used in cache keys.
    std::string fingerprint() const;
    double tol() const { return std::max(rel_tol, abs_tol); }
};

struct QuadMeta {
    std::vector<double> eps;  // per axis
    double half_width = 0.0;
    std::size_t nodes = 0;
    double step = 0.0;  // 0 for Gauss-Legendre panel rules
};

struct EvalResult {
    cdouble value;
    double err_estimate = 0.0;
    QuadMeta meta;

    static EvalResult exact(cdouble v) { return EvalResult{v, 0.0, {}}; }
};

// Window from a decay rate: log(1/tol)/decay plus a margin.
double window_for(double decay, double tol, double margin = 2.0);

using IntervalIntegrand = std::function<cdouble(double)>;
using LineIntegrand = std::function<cdouble(cdouble)>;
using MultiIntegrand = std::function<cdouble(std::span<const cdouble>)>;

// Adaptive Gauss-Legendre panels with bisection on [a, b].
EvalResult integrate_interval(const IntervalIntegrand& f, double a, double b, const QuadConfig& cfg);

// i * int f(-eps + iu) du over the real line, truncated at |u| <= U.
EvalResult integrate_line(const LineIntegrand& f, double eps, double decay, const QuadConfig& cfg);

// Iterated integral over r vertical lines, innermost axis last.
EvalResult integrate_multi(const MultiIntegrand& f, std::span<const double> eps, std::span<const double> decay,
                           const QuadConfig& cfg);

// int_0^inf f(t) dt truncated at log(1/tol)/decay.
EvalResult integrate_halfline(const IntervalIntegrand& f, double decay, const QuadConfig& cfg);

// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussRule& gauss_rule(int order);

}  // namespace omzv
