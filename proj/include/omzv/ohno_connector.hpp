#pragma once

#include "omzv/hyperbolic_gamma.hpp"
#include "omzv/ncseries.hpp"
#include "omzv/omega_mzv.hpp"

#include <array>
#include <map>
#include <utility>
#include <vector>

namespace omzv {

// Evaluation point of the generating functions. eps = 0 selects a default
// contour offset for each integral.
struct OhnoParams {
    cdouble lam;
    cdouble mu;
    int order = 2;
    double eps = 0.0;
};

// (e^{2 pi i omega z} - 1) / (2 pi i omega), the expansion variable for
// lambda and mu.
cdouble ohno_variable(cdouble z, const OmegaParam& p);

// Coefficients c_{m,n} for m + n <= order.
class OhnoTable {
public:
    explicit OhnoTable(int order = 2);

    int order() const noexcept { return order_; }
    cdouble at(int m, int n) const;
    double err(int m, int n) const;
    void set(int m, int n, cdouble value, double err = 0.0);
    void add(int m, int n, cdouble value, double err = 0.0);
    // Sum of c_{m,n} xi^m eta^n.
    cdouble evaluate(cdouble xi, cdouble eta) const;
    // Largest |c_{m,n} - other_{m,n}| and the combined error of that cell.
    std::pair<double, double> max_difference(const OhnoTable& other) const;

    const std::map<std::pair<int, int>, std::pair<cdouble, double>>& cells() const noexcept { return cells_; }

private:
    void check(int m, int n) const;
    int order_;
    std::map<std::pair<int, int>, std::pair<cdouble, double>> cells_;
};

// All (m_1, ..., m_r) of non-negative integers summing to m, lexicographic.
std::vector<std::vector<int>> compositions(int total, int parts);

// Sum of zeta_omega(k + m_vec + n_vec) over compositions of m and n.
EvalResult double_ohno_sum(const Index& k, int m, int n, MzvEvaluator& zeta);
EvalResult double_ohno_sum(const Index& k, int m, int n, const OmegaParam& p, const QuadConfig& cfg);
// Table of O_{m,n}(k) for m + n <= order.
OhnoTable ohno_table(const Index& k, int order, MzvEvaluator& zeta);

// Contour offset used for the Ohno integral of depth r: the configured value
// (checked against eps < 1/(2 r omega)) or a default inside that bound.
double ohno_eps(int depth, const OmegaParam& p, double requested);
// Throws DomainError unless |lam|, |mu| < eps / (3 pi).
void check_ohno_region(cdouble lam, cdouble mu, double eps);

// J_k(t | lam, mu).
cdouble ohno_J(int k, cdouble t, cdouble lam, cdouble mu, const OmegaParam& p);

EvalResult ohno_generating(const Index& k, const OhnoParams& op, const OmegaParam& p, const QuadConfig& cfg);
// Truncated double series of O_{m,n} in the expansion variables.
EvalResult ohno_series(const Index& k, const OhnoParams& op, MzvEvaluator& zeta);

cdouble d_norm(cdouble lam, cdouble mu, const GammaContext& ctx);

// Default offset for a connected integral with r + s variables, inside
// (r + s + 2) eps < min(1, 1/omega).
double connected_eps(int variables, const OmegaParam& p, double requested);

EvalResult connected_integral(const Index& k, const Index& l, const OhnoParams& op, const GammaContext& ctx,
                              const QuadConfig& cfg);

struct SaalschutzResult {
    EvalResult lhs;
    cdouble rhs;
    // Distance from the contour to the nearest pole of either family.
    double min_pole_distance = 0.0;
};

// The contour is the horizontal line Im u = shift.
SaalschutzResult saalschutz_check(cdouble u1, cdouble u2, cdouble u4, cdouble u5, const GammaContext& ctx,
                                  const QuadConfig& cfg, double shift = 0.0);

// Three fixed parameter points with Im u_j = c_j * omega_bar.
std::vector<std::array<cdouble, 4>> saalschutz_presets(const OmegaParam& p);

// Omega(w | xi, eta) for a series whose X-coefficients lie in y h x.
OhnoTable omega_Omega(const XSeries& w, int order, MzvEvaluator& zeta);

struct RelationCheck {
    cdouble lhs;
    cdouble rhs;
    double err_estimate = 0.0;
    double residual() const { return std::abs(lhs - rhs); }
    double relative() const { return std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-300); }
};

// I(k, {1}) against d(lam, mu) O(k raised).
RelationCheck initial_relation(const Index& k, const OhnoParams& op, const GammaContext& ctx, const QuadConfig& cfg);
// I(k->, l) = I(k, l^) + Lam M I(k->^, l^).
RelationCheck transport_first(const Index& k, const Index& l, const OhnoParams& op, const GammaContext& ctx,
                              const QuadConfig& cfg);
// I(k^, l) = I(k, l->) - Lam M I(k^, l->^).
RelationCheck transport_second(const Index& k, const Index& l, const OhnoParams& op, const GammaContext& ctx,
                               const QuadConfig& cfg);

struct ExpansionFit {
    OhnoTable table;
    double condition = 0.0;
    double fit_residual = 0.0;
};

// Coefficients Z_{m,n}(k, l) of I(k, l)/d in the expansion variables by a
// least-squares fit on points lam, mu on a circle of the given radius.
ExpansionFit connected_expansion(const Index& k, const Index& l, int order, const GammaContext& ctx,
                                 const QuadConfig& cfg, double radius = 0.01, double eps = 0.0);

}  // namespace omzv
