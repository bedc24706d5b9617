#pragma once

#include "omzv/chain_integral.hpp"
#include "omzv/contour_quad.hpp"
#include "omzv/word_algebra.hpp"

#include <map>
#include <mutex>
#include <span>
#include <string>

namespace omzv {

class ValueCache;

class OmegaParam {
public:
    explicit OmegaParam(double omega);

    double omega() const noexcept { return omega_; }
    // Value of h: 2 pi i omega.
    cdouble hbar() const noexcept;
    double omega_bar() const noexcept { return 0.5 * (1.0 + 1.0 / omega_); }
    // min(1, 1/omega), the width of the safe strip for contour offsets.
    double unit_min() const noexcept { return std::min(1.0, 1.0 / omega_); }

private:
    double omega_;
};

// 1 / (e^z - 1) without overflow for large |Re z|.
cdouble inv_expm1(cdouble z);
// e^z - 1 accurate near zero.
cdouble expm1(cdouble z);
// 1 / (e^{2 pi i t} - 1), the measure factor shared by all integrals.
cdouble contour_measure(cdouble t);

cdouble kernel_I(const ALetter& letter, cdouble t, const OmegaParam& p);

// Decay rate of the integrands along the contours: (1 - |1 - omega|) pi.
double z_decay(const OmegaParam& p);
// Contour offset for an integral over `dims` variables: the configured value
// if set (validated against the convergence bound), else min(1, 1/omega)/(dims+1).
double z_eps(int dims, const OmegaParam& p, const QuadConfig& cfg);

// One integration variable per letter.
EvalResult Z_omega_monomial(const AMonomial& m, const OmegaParam& p, const QuadConfig& cfg);
// One integration variable per g-letter; the E letters are absorbed into
// binomial factors.
EvalResult Z_omega_reduced(std::span<const int> alphas, std::span<const int> betas, const OmegaParam& p,
                           const QuadConfig& cfg);
EvalResult Z_omega_reduced(const AMonomial& m, const OmegaParam& p, const QuadConfig& cfg);

enum class ZPath { reduced, direct };

// Evaluates and memoizes monomial values; optionally backed by a persistent
// cache. Safe for concurrent use.
class MzvEvaluator {
public:
    MzvEvaluator(OmegaParam p, QuadConfig cfg, ValueCache* cache = nullptr, ZPath path = ZPath::reduced);

    const OmegaParam& param() const noexcept { return p_; }
    const QuadConfig& config() const noexcept { return cfg_; }

    EvalResult monomial(const AMonomial& m);
    // Throws DomainError outside the span of admissible monomials.
    EvalResult combination(const AComb& c);
    EvalResult word(const HPoly& w);
    // Throws DomainError for non-admissible indices.
    EvalResult zeta(const Index& k);

private:
    OmegaParam p_;
    QuadConfig cfg_;
    ValueCache* cache_;
    ZPath path_;
    std::mutex mutex_;
    std::map<AMonomial, EvalResult> memo_;
};

EvalResult Z_omega(const AComb& c, const OmegaParam& p, const QuadConfig& cfg);
EvalResult Z_omega(const HPoly& w, const OmegaParam& p, const QuadConfig& cfg);
EvalResult zeta_omega(const Index& k, const OmegaParam& p, const QuadConfig& cfg);

// Generating function at omega = 1 and depth one.
cdouble r1_generating(cdouble x, cdouble y);
// Depth one or two; the depth-two case is the partial-fraction recurrence.
cdouble r1_recurrence(std::span<const cdouble> xs, std::span<const cdouble> ys);
// Coefficient of X^beta Y^alpha in the expansion of r1_generating in
// X = (e^{2 pi i x} - 1)/(2 pi i), Y likewise, by a discrete Cauchy integral.
cdouble r1_coefficient(int alpha, int beta, double radius = 0.05, int points = 32);

EvalResult r_omega_integral(std::span<const cdouble> xs, std::span<const cdouble> ys, const OmegaParam& p,
                            const QuadConfig& cfg);

}  // namespace omzv
