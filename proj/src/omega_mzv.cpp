#include "omzv/omega_mzv.hpp"

#include "omzv/errors.hpp"
#include "omzv/value_cache.hpp"

#include <cmath>
#include <numbers>

namespace omzv {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cdouble kTwoPiI(0.0, 2.0 * std::numbers::pi);

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// (t + 1)(t + 2)...(t + alpha) / alpha!
cdouble binomial_shift(cdouble t, int alpha) {
    cdouble v = 1.0;
    for (int j = 1; j <= alpha; ++j) v *= (t + static_cast<double>(j)) / static_cast<double>(j);
    return v;
}

cdouble ipow(cdouble z, int n) {
    cdouble r = 1.0;
    for (int i = 0; i < n; ++i) r *= z;
    return r;
}

// Horizontal distance from the contours to the nearest pole of a Z-type
// integrand with `dims` variables.
double z_pole_distance(int dims, double eps, const OmegaParam& p) {
    return std::min({eps, 1.0 - eps, 1.0 / p.omega() - dims * eps});
}

EvalResult run_z_chain(const std::vector<ChainStep>& steps, int pole_order, const OmegaParam& p, const QuadConfig& cfg) {
    const int dims = static_cast<int>(steps.size());
    if (dims > cfg.max_dim)
        throw DomainError("integral of dimension " + std::to_string(dims) + " exceeds the configured maximum " +
                          std::to_string(cfg.max_dim));
    const double eps = z_eps(dims, p, cfg);
    ChainSpec spec{eps, z_pole_distance(dims, eps, p), z_decay(p), pole_order};
    return integrate_chain(steps, spec, cfg);
}

}  // namespace

OmegaParam::OmegaParam(double omega) : omega_(omega) {
    if (!(omega > 0.0 && omega < 2.0)) throw DomainError("omega must satisfy 0 < omega < 2, got " + fmt(omega));
}

cdouble OmegaParam::hbar() const noexcept { return {0.0, 2.0 * kPi * omega_}; }

cdouble expm1(cdouble z) {
    if (std::abs(z) < 1e-4) return z * (1.0 + z * (0.5 + z * (1.0 / 6.0 + z * (1.0 / 24.0 + z / 120.0))));
    return std::exp(z) - 1.0;
}

cdouble inv_expm1(cdouble z) {
    if (z.real() > 0.0) {
        const cdouble w = std::exp(-z);
        return w / (1.0 - w);
    }
    return 1.0 / expm1(z);
}

cdouble contour_measure(cdouble t) { return inv_expm1(kTwoPiI * t); }

cdouble kernel_I(const ALetter& letter, cdouble t, const OmegaParam& p) {
    if (letter.is_e1g1()) return p.hbar();
    const cdouble arg = -p.hbar() * t;
    if (std::abs(expm1(arg)) < 1e-14) throw PoleError("kernel evaluated at a pole t = " + fmt(t.real()) + "+" + fmt(t.imag()) + "i");
    return ipow(p.hbar() * inv_expm1(arg), letter.k());
}

double z_decay(const OmegaParam& p) { return (1.0 - std::abs(1.0 - p.omega())) * kPi; }

double z_eps(int dims, const OmegaParam& p, const QuadConfig& cfg) {
    if (dims < 1) throw DomainError("at least one integration variable is required");
    const double bound = std::min(1.0, 1.0 / (dims * p.omega()));
    if (cfg.eps > 0.0) {
        if (cfg.eps >= bound)
            throw DomainError("eps = " + fmt(cfg.eps) + " violates eps < min(1, 1/(r omega)) = " + fmt(bound));
        return cfg.eps;
    }
    return p.unit_min() / (dims + 1);
}

EvalResult Z_omega_monomial(const AMonomial& m, const OmegaParam& p, const QuadConfig& cfg) {
    if (!m.admissible()) throw DomainError("monomial " + m.str() + " is not admissible");
    if (m.empty()) return EvalResult::exact(1.0);
    std::vector<ChainStep> steps;
    int order = 1;
    for (const ALetter& letter : m.letters()) {
        steps.push_back({contour_measure, [letter, p](cdouble T) { return kernel_I(letter, T, p); }});
        order = std::max(order, letter.k());
    }
    return run_z_chain(steps, order, p, cfg);
}

EvalResult Z_omega_reduced(std::span<const int> alphas, std::span<const int> betas, const OmegaParam& p,
                           const QuadConfig& cfg) {
    if (alphas.size() != betas.size()) throw DomainError("alpha and beta tuples differ in length");
    if (alphas.empty()) return EvalResult::exact(1.0);
    std::vector<ChainStep> steps;
    int order = 1;
    for (std::size_t a = 0; a < alphas.size(); ++a) {
        const int alpha = alphas[a];
        const int beta = betas[a];
        if (alpha < 0 || beta < 0) throw DomainError("block exponents must be non-negative");
        const cdouble scale = ipow(-p.hbar(), alpha);
        order = std::max(order, beta + 1);
        steps.push_back({[alpha, scale](cdouble t) { return contour_measure(t) * scale * binomial_shift(t, alpha); },
                         [beta, p](cdouble T) { return kernel_I(ALetter::g(beta + 1), T, p); }});
    }
    return run_z_chain(steps, order, p, cfg);
}

EvalResult Z_omega_reduced(const AMonomial& m, const OmegaParam& p, const QuadConfig& cfg) {
    const auto blocks = m.blocks();
    std::vector<int> alphas, betas;
    for (const Block& b : blocks) {
        alphas.push_back(b.alpha);
        betas.push_back(b.beta);
    }
    return Z_omega_reduced(alphas, betas, p, cfg);
}

MzvEvaluator::MzvEvaluator(OmegaParam p, QuadConfig cfg, ValueCache* cache, ZPath path)
    : p_(p), cfg_(std::move(cfg)), cache_(cache), path_(path) {
    cfg_.validate();
}

EvalResult MzvEvaluator::monomial(const AMonomial& m) {
    if (!m.admissible()) throw DomainError("monomial " + m.str() + " is not admissible");
    {
        std::lock_guard lock(mutex_);
        if (auto it = memo_.find(m); it != memo_.end()) return it->second;
    }
    const std::string key = ValueCache::make_key(std::string(path_ == ZPath::reduced ? "Zr:" : "Zd:") + m.str(),
                                                 p_.omega(), cfg_.fingerprint());
    std::optional<EvalResult> hit;
    if (cache_) hit = cache_->lookup(key);
    EvalResult r = hit ? *hit : (path_ == ZPath::reduced ? Z_omega_reduced(m, p_, cfg_) : Z_omega_monomial(m, p_, cfg_));
    if (cache_ && !hit) cache_->store(key, r);
    std::lock_guard lock(mutex_);
    memo_.emplace(m, r);
    return r;
}

EvalResult MzvEvaluator::combination(const AComb& c) {
    if (!in_admissible_span(c))
        throw DomainError("'" + to_string(c) + "' is outside the span of admissible monomials over Q[h]");
    EvalResult total = EvalResult::exact(0.0);
    for (const auto& [m, coeff] : c) {
        const cdouble factor = coeff.evaluate(p_.hbar());
        EvalResult r = monomial(m);
        total.value += factor * r.value;
        total.err_estimate += std::abs(factor) * r.err_estimate;
        total.meta.nodes += r.meta.nodes;
        if (r.meta.eps.size() >= total.meta.eps.size()) {
            total.meta.eps = r.meta.eps;
            total.meta.step = r.meta.step;
        }
        total.meta.half_width = std::max(total.meta.half_width, r.meta.half_width);
    }
    return total;
}

EvalResult MzvEvaluator::word(const HPoly& w) {
    if (!in_admissible_span(w))
        throw DomainError("'" + to_string(w) + "' is outside the span of admissible monomials over Q[h]");
    return combination(to_a_basis(w));
}

EvalResult MzvEvaluator::zeta(const Index& k) {
    if (!k.admissible()) throw DomainError("index (" + k.str() + ") is not admissible");
    return combination(to_a_basis(index_to_e_word(k)));
}

EvalResult Z_omega(const AComb& c, const OmegaParam& p, const QuadConfig& cfg) {
    return MzvEvaluator(p, cfg).combination(c);
}

EvalResult Z_omega(const HPoly& w, const OmegaParam& p, const QuadConfig& cfg) { return MzvEvaluator(p, cfg).word(w); }

EvalResult zeta_omega(const Index& k, const OmegaParam& p, const QuadConfig& cfg) { return MzvEvaluator(p, cfg).zeta(k); }

// ---------------------------------------------------------------- generating functions

namespace {

// (e^{2 pi i x y} - 1) / (e^{2 pi i x} - 1), continued to x = 0.
cdouble r1_ratio(cdouble x, cdouble y) {
    if (x == 0.0) return y;
    const cdouble den = expm1(kTwoPiI * x);
    if (std::abs(den) < 1e-12) throw PoleError("generating function evaluated at a pole");
    return expm1(kTwoPiI * x * y) / den;
}

}  // namespace

cdouble r1_generating(cdouble x, cdouble y) {
    if (y == 0.0) std::swap(x, y);
    if (y == 0.0) return -1.0;
    const cdouble den = expm1(kTwoPiI * y);
    if (std::abs(den) < 1e-12) throw PoleError("generating function evaluated at a pole");
    return -kTwoPiI * r1_ratio(x, y) / den;
}

cdouble r1_recurrence(std::span<const cdouble> xs, std::span<const cdouble> ys) {
    if (xs.size() != ys.size() || xs.empty()) throw DomainError("x and y tuples must be non-empty and of equal length");
    if (xs.size() == 1) return r1_generating(xs[0], ys[0]);
    if (xs.size() > 2) throw DomainError("the recurrence is implemented for depth at most two");
    const cdouble x1 = xs[0], x2 = xs[1], y1 = ys[0], y2 = ys[1];
    const cdouble gap = std::exp(kTwoPiI * x1) - std::exp(kTwoPiI * x2);
    const cdouble den = -expm1(kTwoPiI * y2);
    if (std::abs(gap) < 1e-10 || std::abs(den) < 1e-12) throw PoleError("recurrence evaluated at a pole");
    const cdouble twist = std::exp(kTwoPiI * (x2 - 1.0) * y2);
    return kTwoPiI / (den * gap) *
           (r1_generating(x1, y1) - r1_generating(x2, y1) -
            twist * (r1_generating(x1, y1 - y2) - r1_generating(x2, y1 - y2)));
}

cdouble r1_coefficient(int alpha, int beta, double radius, int points) {
    if (alpha < 0 || beta < 0) throw DomainError("coefficient orders must be non-negative");
    if (!(radius > 0 && radius < 1.0 / (2.0 * kPi))) throw DomainError("radius must lie inside the disc of convergence");
    cdouble sum = 0.0;
    for (int j = 0; j < points; ++j) {
        const cdouble ux = std::polar(1.0, 2.0 * kPi * j / points);
        const cdouble x = std::log(1.0 + kTwoPiI * radius * ux) / kTwoPiI;
        for (int k = 0; k < points; ++k) {
            const cdouble uy = std::polar(1.0, 2.0 * kPi * k / points);
            const cdouble y = std::log(1.0 + kTwoPiI * radius * uy) / kTwoPiI;
            sum += r1_generating(x, y) / (ipow(ux, beta) * ipow(uy, alpha));
        }
    }
    return sum / (static_cast<double>(points) * points * std::pow(radius, alpha + beta));
}

EvalResult r_omega_integral(std::span<const cdouble> xs, std::span<const cdouble> ys, const OmegaParam& p,
                            const QuadConfig& cfg) {
    if (xs.size() != ys.size() || xs.empty()) throw DomainError("x and y tuples must be non-empty and of equal length");
    const int r = static_cast<int>(xs.size());
    const double eps = z_eps(r, p, cfg);
    double dist = std::min(eps, 1.0 - eps);
    double decay = z_decay(p);
    cdouble ysum = 0.0;
    for (int a = 0; a < r; ++a) {
        const double shift = std::abs(xs[a].real());
        dist = std::min({dist, (a + 1) * eps - shift, 1.0 / p.omega() - (a + 1) * eps - shift});
        decay -= 2.0 * kPi * p.omega() * std::abs(ys[a].real());
        ysum += ys[a];
    }
    if (dist < 0.2 * eps) throw PoleError("contours do not separate the poles for these arguments");
    if (decay <= 0.0) throw DomainError("arguments too large: the integrand does not decay");

    std::vector<ChainStep> steps;
    for (int a = 0; a < r; ++a) {
        const cdouble x = xs[a], y = ys[a];
        const cdouble h = p.hbar();
        steps.push_back({[h, y](cdouble t) { return contour_measure(t) * std::exp(-h * y * t); },
                         // e^{hT} / (1 - e^{h(x+T)}) written to stay finite for large |Im T|
                         [h, x](cdouble T) { return -std::exp(-h * x) * (1.0 + inv_expm1(h * (x + T))); }});
    }
    ChainSpec spec{eps, dist, decay};
    EvalResult res = integrate_chain(steps, spec, cfg);
    const cdouble prefactor = ipow(p.hbar(), r) * std::exp(-p.hbar() * ysum);
    res.value *= prefactor;
    res.err_estimate *= std::abs(prefactor);
    return res;
}

}  // namespace omzv
