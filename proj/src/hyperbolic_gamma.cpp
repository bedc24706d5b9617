#include "omzv/hyperbolic_gamma.hpp"

#include "omzv/errors.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace omzv {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cdouble kI(0.0, 1.0);
// The half-line integrand decays like e^{-rate t}; integrating to 40/rate
// leaves e^{-40}.
constexpr double kDecayLengths = 40.0;
constexpr double kPanelWidth = 0.5;
constexpr int kPanelOrder = 20;
// Below t * max(1, omega, 2 omega |z|) < kSeriesCut the integrand is summed
// from its Taylor expansion to avoid cancellation.
constexpr double kSeriesCut = 0.05;
constexpr double kHitTolerance = 1e-12;

std::string fmt(cdouble z) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
    return buf;
}

}  // namespace

cdouble log_m2i_sinh(cdouble v) {
    if (v.real() > 15.0) return v - kI * (kPi / 2) + std::log(1.0 - std::exp(-2.0 * v));
    if (v.real() < -15.0) return -v + kI * (kPi / 2) + std::log(1.0 - std::exp(2.0 * v));
    return std::log(-2.0 * kI * std::sinh(v));
}

GammaContext::GammaContext(OmegaParam p) : p_(p) {
    const double band_rate = 1.0 + p_.omega() - p_.omega() * p_.unit_min();
    band_nodes_ = make_nodes(p_.omega(), kDecayLengths / band_rate);
}

double GammaContext::far_field() const noexcept { return 45.0 / (2.0 * kPi * std::min(1.0, p_.omega())); }

GammaContext::Nodes GammaContext::make_nodes(double omega, double cutoff) {
    const GaussRule& rule = gauss_rule(kPanelOrder);
    const int panels = static_cast<int>(std::ceil(cutoff / kPanelWidth));
    const double width = cutoff / panels;
    std::vector<std::pair<double, double>> tw;
    tw.reserve(static_cast<std::size_t>(panels) * rule.nodes.size());
    for (int k = 0; k < panels; ++k) {
        const double mid = (k + 0.5) * width;
        for (std::size_t j = 0; j < rule.nodes.size(); ++j)
            tw.emplace_back(mid + 0.5 * width * rule.nodes[j], 0.5 * width * rule.weights[j]);
    }
    std::sort(tw.begin(), tw.end());
    Nodes n;
    n.cutoff = cutoff;
    for (auto [t, w] : tw) {
        n.t.push_back(t);
        n.weight.push_back(w);
        // log of w / (2 t sinh(omega t) sinh t), stable for large t.
        n.sin_weight.push_back(std::log(2.0 * w / t) - (1.0 + omega) * t - std::log(-std::expm1(-2.0 * omega * t)) -
                               std::log(-std::expm1(-2.0 * t)));
        n.sin_scale.push_back(std::exp(n.sin_weight.back()));
        n.pole_weight.push_back(w / (t * t));
    }
    n.pole_tail.assign(n.t.size() + 1, 0.0);
    for (std::size_t j = n.t.size(); j-- > 0;) n.pole_tail[j] = n.pole_tail[j + 1] + n.pole_weight[j];
    return n;
}

cdouble GammaContext::strip_sum(cdouble z, const Nodes& nodes) const {
    const double omega = p_.omega();
    const cdouble a = 2.0 * omega * z;
    const double cut = kSeriesCut / std::max({1.0, omega, std::abs(a)});
    const auto first = static_cast<std::size_t>(std::lower_bound(nodes.t.begin(), nodes.t.end(), cut) - nodes.t.begin());

    // Small t: z (p1 + p2 t^2 + p3 t^4) from the product of the series of
    // sin(at)/(at), omega t / sinh(omega t) and t / sinh t.
    cdouble sum = 0.0;
    if (first > 0) {
        const cdouble a2 = a * a;
        const double w2 = omega * omega;
        const std::array<cdouble, 4> s{1.0, -a2 / 6.0, a2 * a2 / 120.0, -a2 * a2 * a2 / 5040.0};
        const std::array<double, 4> b{1.0, -1.0 / 6.0, 7.0 / 360.0, -31.0 / 15120.0};
        std::array<cdouble, 4> b1{}, prod{}, p{};
        for (int k = 0; k < 4; ++k) b1[static_cast<std::size_t>(k)] = b[static_cast<std::size_t>(k)] * std::pow(w2, k);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; i + j < 4; ++j) prod[i + j] += s[i] * b1[j];
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; i + j < 4; ++j) p[i + j] += prod[i] * b[j];
        for (std::size_t j = 0; j < first; ++j) {
            const double t2 = nodes.t[j] * nodes.t[j];
            sum += nodes.weight[j] * z * (p[1] + t2 * (p[2] + t2 * p[3]));
        }
    }
    if (std::abs(a.imag()) * nodes.cutoff < 600.0) {
        cdouble osc = 0.0;
        for (std::size_t j = first; j < nodes.t.size(); ++j) {
            const cdouble e = std::exp(kI * a * nodes.t[j]);
            osc += (e - 1.0 / e) * nodes.sin_scale[j];
        }
        sum += osc / (2.0 * kI);
    } else {
        // Near the strip edge the two exponentials overflow separately.
        for (std::size_t j = first; j < nodes.t.size(); ++j) {
            const cdouble phase = kI * a * nodes.t[j];
            sum += (std::exp(phase + nodes.sin_weight[j]) - std::exp(-phase + nodes.sin_weight[j])) / (2.0 * kI);
        }
    }
    sum -= z * nodes.pole_tail[first];
    return kI * (sum - z / nodes.cutoff);
}

cdouble GammaContext::log_G_strip(cdouble z) const {
    const double y = std::abs(z.imag());
    if (!(y < omega_bar() - strip_margin()))
        throw DomainError("log_G_strip needs |Im z| < " + std::to_string(omega_bar() - strip_margin()) + ", got z = " + fmt(z));
    if (y <= 0.5 * p_.unit_min()) return strip_sum(z, band_nodes_);
    const double rate = 1.0 + omega() - 2.0 * omega() * y;
    return strip_sum(z, make_nodes(omega(), kDecayLengths / rate));
}

cdouble GammaContext::log_G_asymptotic(cdouble z) const {
    const double omega = p_.omega();
    const cdouble lead = kI * kPi * (0.5 * omega * z * z + (omega + 1.0 / omega) / 24.0);
    return z.real() >= 0 ? -lead : lead;
}

std::optional<cdouble> GammaContext::evaluate(cdouble z0) const {
    const double omega = p_.omega();
    const double half_band = 0.5 * p_.unit_min();
    const double wb = omega_bar();
    // Shift by the longer period first.
    std::array<std::pair<double, double>, 2> shifts{{{1.0, omega}, {1.0 / omega, 1.0}}};
    if (shifts[1].first > shifts[0].first) std::swap(shifts[0], shifts[1]);

    cdouble z = z0;
    cdouble acc = 0.0;
    for (auto [step, rate] : shifts) {
        // G(w + i step) = -2i sinh(pi rate (w + i wb)) G(w)
        while (z.imag() > half_band + 1e-12 && z.imag() - step >= -half_band - 1e-12) {
            const cdouble w = z - kI * step;
            const cdouble v = kPi * rate * (w + kI * wb);
            if (std::abs(v.real()) < 1.0 && std::abs(std::sinh(v)) < kHitTolerance) return std::nullopt;
            acc += log_m2i_sinh(v);
            z = w;
        }
        while (z.imag() < -half_band - 1e-12 && z.imag() + step <= half_band + 1e-12) {
            const cdouble v = kPi * rate * (z + kI * wb);
            if (std::abs(v.real()) < 1.0 && std::abs(std::sinh(v)) < kHitTolerance)
                throw PoleError("G has a pole at z = " + fmt(z0));
            acc -= log_m2i_sinh(v);
            z += kI * step;
        }
    }
    if (std::abs(z.real()) > far_field()) return acc + log_G_asymptotic(z);
    return acc + strip_sum(z, band_nodes_);
}

std::optional<cdouble> GammaContext::lookup(cdouble z) const {
    const auto key = std::make_pair(std::bit_cast<std::uint64_t>(z.real()), std::bit_cast<std::uint64_t>(z.imag()));
    {
        std::lock_guard lock(mutex_);
        if (auto it = memo_.find(key); it != memo_.end()) {
            ++stats_.hits;
            return it->second;
        }
    }
    std::optional<cdouble> v = evaluate(z);
    std::lock_guard lock(mutex_);
    ++stats_.misses;
    memo_.emplace(key, v);
    return v;
}

cdouble GammaContext::log_G(cdouble z) const {
    auto v = lookup(z);
    if (!v) throw PoleError("G has a zero at z = " + fmt(z) + "; its logarithm is undefined");
    return *v;
}

cdouble GammaContext::G(cdouble z) const {
    auto v = lookup(z);
    return v ? std::exp(*v) : cdouble(0.0);
}

GammaStats GammaContext::stats() const {
    std::lock_guard lock(mutex_);
    GammaStats s = stats_;
    s.size = memo_.size();
    return s;
}

void GammaContext::clear_cache() const {
    std::lock_guard lock(mutex_);
    memo_.clear();
    stats_ = {};
}

cdouble log_G_strip(cdouble z, const GammaContext& ctx) { return ctx.log_G_strip(z); }
cdouble log_G(cdouble z, const GammaContext& ctx) { return ctx.log_G(z); }
cdouble G(cdouble z, const GammaContext& ctx) { return ctx.G(z); }

std::optional<cdouble> log_theta_kernel(cdouble t, cdouble u, cdouble lam, cdouble mu, const GammaContext& ctx) {
    const double wb = ctx.omega_bar();
    const cdouble hbar = ctx.param().hbar();
    const cdouble s = t + u + lam + mu;
    const cdouble denom = -expm1(hbar * s);
    if (std::abs(denom) < kHitTolerance) throw PoleError("connected kernel is singular at t + u + lam + mu = " + fmt(s));
    auto arg = [&](cdouble x) { return kI * (wb + x); };
    cdouble acc = -kI * kPi * ctx.omega() * t * u - std::log(denom);
    for (cdouble x : {t, u, s}) {
        try {
            acc += ctx.log_G(arg(x));
        } catch (const PoleError&) {
            if (ctx.G(arg(x)) == cdouble(0.0)) return std::nullopt;
            throw;
        }
    }
    for (cdouble x : {t + lam, t + mu, u + lam, u + mu}) {
        if (ctx.G(arg(x)) == cdouble(0.0))
            throw PoleError("connected kernel is singular: G vanishes at " + fmt(arg(x)));
        acc -= ctx.log_G(arg(x));
    }
    return acc;
}

cdouble theta_kernel(cdouble t, cdouble u, cdouble lam, cdouble mu, const GammaContext& ctx) {
    auto v = log_theta_kernel(t, u, lam, mu, ctx);
    return v ? std::exp(*v) : cdouble(0.0);
}

}  // namespace omzv
