#pragma once

#include "omzv/omega_mzv.hpp"

#include <cstdint>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

namespace omzv {

struct GammaStats {
    std::size_t hits = 0;
    std::size_t misses = 0;
    std::size_t size = 0;
};

// Hyperbolic gamma function G(z) = G(z | 1, 1/omega), evaluated in log-scale.
// Inside the band |Im z| <= min(1, 1/omega)/2 a half-line integral is used;
// other points are moved into the band with the two shift equations, and
// points far from the imaginary axis use the asymptotic form. Results are
// memoized per context.
class GammaContext {
public:
    explicit GammaContext(OmegaParam p);

    const OmegaParam& param() const noexcept { return p_; }
    double omega() const noexcept { return p_.omega(); }
    double omega_bar() const noexcept { return p_.omega_bar(); }
    // Minimum distance to the edge of the strip |Im z| < omega_bar accepted by
    // log_G_strip.
    double strip_margin() const noexcept { return 0.05 * p_.omega_bar(); }
    // |Re z| beyond which the asymptotic form is exact to double precision.
    double far_field() const noexcept;

    // Half-line integral; valid for |Im z| < omega_bar - strip_margin.
    cdouble log_G_strip(cdouble z) const;
    // Throws PoleError at poles and zeros of G.
    cdouble log_G(cdouble z) const;
    // Zero at the zeros of G; throws PoleError at poles.
    cdouble G(cdouble z) const;
    // Leading asymptotic of log G for Re z -> +infinity (and by reflection for
    // Re z -> -infinity).
    cdouble log_G_asymptotic(cdouble z) const;

    GammaStats stats() const;
    void clear_cache() const;

private:
    struct Nodes {
        std::vector<double> t;
        std::vector<double> sin_weight;   // log of w / (2 t sinh(omega t) sinh t)
        std::vector<double> sin_scale;    // its exponential
        std::vector<double> pole_weight;  // w / t^2
        std::vector<double> pole_tail;    // suffix sums of pole_weight
        std::vector<double> weight;
        double cutoff = 0.0;
    };
    struct KeyHash {
        std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const noexcept {
            return std::hash<std::uint64_t>{}(k.first * 0x9e3779b97f4a7c15ULL ^ k.second);
        }
    };

    static Nodes make_nodes(double omega, double cutoff);
    cdouble strip_sum(cdouble z, const Nodes& nodes) const;
    // nullopt at a zero of G.
    std::optional<cdouble> evaluate(cdouble z) const;
    std::optional<cdouble> lookup(cdouble z) const;

    OmegaParam p_;
    Nodes band_nodes_;
    mutable std::mutex mutex_;
    mutable std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, std::optional<cdouble>, KeyHash> memo_;
    mutable GammaStats stats_;
};

cdouble log_G_strip(cdouble z, const GammaContext& ctx);
cdouble log_G(cdouble z, const GammaContext& ctx);
cdouble G(cdouble z, const GammaContext& ctx);

// log of the connected kernel
//   e^{-pi i omega t u} / (1 - e^{2 pi i omega (t+u+lam+mu)})
//   * G(i(wb+t)) G(i(wb+u)) G(i(wb+t+u+lam+mu))
//   / (G(i(wb+t+lam)) G(i(wb+t+mu)) G(i(wb+u+lam)) G(i(wb+u+mu))).
// Throws PoleError at singular points; nullopt where the kernel vanishes.
std::optional<cdouble> log_theta_kernel(cdouble t, cdouble u, cdouble lam, cdouble mu, const GammaContext& ctx);
cdouble theta_kernel(cdouble t, cdouble u, cdouble lam, cdouble mu, const GammaContext& ctx);

// log(-2i sinh v) without overflow.
cdouble log_m2i_sinh(cdouble v);

}  // namespace omzv
