#include "omzv/contour_quad.hpp"

#include "omzv/errors.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>

namespace omzv {

namespace {

template <unsigned N>
GaussRule make_rule() {
    using G = boost::math::quadrature::gauss<double, N>;
    const auto& x = G::abscissa();
    const auto& w = G::weights();
    GaussRule rule;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0.0) {
            rule.nodes.push_back(0.0);
            rule.weights.push_back(w[i]);
            continue;
        }
        rule.nodes.push_back(x[i]);
        rule.weights.push_back(w[i]);
        rule.nodes.push_back(-x[i]);
        rule.weights.push_back(w[i]);
    }
    return rule;
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

const GaussRule& gauss_rule(int order) {
    static std::mutex mutex;
    static std::map<int, GaussRule> rules;
    std::lock_guard lock(mutex);
    if (auto it = rules.find(order); it != rules.end()) return it->second;
    GaussRule rule;
    switch (order) {
        case 4: rule = make_rule<4>(); break;
        case 8: rule = make_rule<8>(); break;
        case 10: rule = make_rule<10>(); break;
        case 15: rule = make_rule<15>(); break;
        case 20: rule = make_rule<20>(); break;
        case 25: rule = make_rule<25>(); break;
        case 30: rule = make_rule<30>(); break;
        default: throw DomainError("unsupported panel order " + std::to_string(order) + " (use 4, 8, 10, 15, 20, 25 or 30)");
    }
    return rules.emplace(order, std::move(rule)).first->second;
}

void QuadConfig::validate() const {
    if (!(rel_tol > 0) || !(abs_tol > 0)) throw DomainError("tolerances must be positive");
    if (half_width < 0) throw DomainError("half_width must be non-negative");
    if (panel_order < 4) throw DomainError("panel_order must be at least 4");
    gauss_rule(panel_order);
    if (max_panels < 1) throw DomainError("max_panels must be positive");
    if (max_dim < 1) throw DomainError("max_dim must be positive");
    if (eps < 0) throw DomainError("eps must be non-negative");
}

std::string QuadConfig::fingerprint() const {
    return "rel=" + fmt_double(rel_tol) + ";abs=" + fmt_double(abs_tol) + ";U=" + fmt_double(half_width) +
           ";order=" + std::to_string(panel_order) + ";panels=" + std::to_string(max_panels) +
           ";dim=" + std::to_string(max_dim) + ";eps=" + fmt_double(eps);
}

double window_for(double decay, double tol, double margin) {
    if (!(decay > 0)) throw DomainError("decay rate must be positive");
    return std::log(1.0 / tol) / decay + margin;
}

EvalResult integrate_interval(const IntervalIntegrand& f, double a, double b, const QuadConfig& cfg) {
    cfg.validate();
    const GaussRule& rule = gauss_rule(cfg.panel_order);
    std::size_t nodes = 0;
    auto panel = [&](double lo, double hi) {
        const double mid = 0.5 * (lo + hi);
        const double half = 0.5 * (hi - lo);
        cdouble sum = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
        nodes += rule.nodes.size();
        return sum * half;
    };

    const double length = b - a;
    if (length <= 0) return EvalResult{0.0, 0.0, {{}, 0.5 * std::abs(length), 0, 0.0}};
    const int initial = std::max(1, std::min(cfg.max_panels / 4, static_cast<int>(std::ceil(length))));

    struct Panel {
        double lo, hi;
        cdouble coarse;
    };
    std::vector<Panel> work;
    cdouble pilot = 0.0;
    for (int p = 0; p < initial; ++p) {
        double lo = a + length * p / initial;
        double hi = a + length * (p + 1) / initial;
        cdouble q = panel(lo, hi);
        pilot += q;
        work.push_back({lo, hi, q});
    }
    const double target = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(pilot));

    cdouble total = 0.0;
    double err = 0.0;
    int panels = initial;
    while (!work.empty()) {
        Panel p = work.back();
        work.pop_back();
        const double mid = 0.5 * (p.lo + p.hi);
        cdouble left = panel(p.lo, mid);
        cdouble right = panel(mid, p.hi);
        const double diff = std::abs(left + right - p.coarse);
        const double allowed = target * (p.hi - p.lo) / length;
        if (diff <= allowed || p.hi - p.lo < 1e-9 * length) {
            total += left + right;
            err += diff;
            continue;
        }
        if (panels + 1 > cfg.max_panels)
            throw ConvergenceError("adaptive quadrature exceeded " + std::to_string(cfg.max_panels) + " panels");
        ++panels;
        work.push_back({mid, p.hi, right});
        work.push_back({p.lo, mid, left});
    }
    return EvalResult{total, err, {{}, 0.5 * length, nodes, 0.0}};
}

EvalResult integrate_line(const LineIntegrand& f, double eps, double decay, const QuadConfig& cfg) {
    if (!(decay > 0)) throw DomainError("decay hint must be positive");
    const double U = cfg.half_width > 0 ? cfg.half_width : window_for(decay, cfg.tol());
    auto g = [&](double u) { return f(cdouble(-eps, u)); };
    EvalResult r = integrate_interval(g, -U, U, cfg);
    const double tail = (std::abs(g(-U)) + std::abs(g(U))) / decay;
    r.value *= cdouble(0.0, 1.0);
    r.err_estimate += tail;
    r.meta.eps = {eps};
    r.meta.half_width = U;
    return r;
}

EvalResult integrate_multi(const MultiIntegrand& f, std::span<const double> eps, std::span<const double> decay,
                           const QuadConfig& cfg) {
    const std::size_t r = eps.size();
    if (r == 0) throw DomainError("integrate_multi needs at least one axis");
    if (decay.size() != r) throw DomainError("one decay hint per axis is required");
    if (static_cast<int>(r) > cfg.max_dim)
        throw DomainError("dimension " + std::to_string(r) + " exceeds the configured maximum " +
                          std::to_string(cfg.max_dim));
    std::vector<double> widths(r);
    for (std::size_t a = 0; a < r; ++a) {
        if (!(decay[a] > 0)) throw DomainError("decay hint must be positive");
        widths[a] = cfg.half_width > 0 ? cfg.half_width : window_for(decay[a], cfg.tol());
    }

    std::vector<cdouble> point(r);
    std::size_t nodes = 0;
    // Inner errors are bounded by their maximum times the outer length.
    std::function<std::pair<cdouble, double>(std::size_t)> level = [&](std::size_t axis) -> std::pair<cdouble, double> {
        if (axis == r) {
            ++nodes;
            return {f(point), 0.0};
        }
        double inner_err = 0.0;
        auto g = [&](double u) {
            point[axis] = cdouble(-eps[axis], u);
            auto [v, e] = level(axis + 1);
            inner_err = std::max(inner_err, e);
            return v;
        };
        EvalResult res = integrate_interval(g, -widths[axis], widths[axis], cfg);
        const double tail = (std::abs(g(-widths[axis])) + std::abs(g(widths[axis]))) / decay[axis];
        return {res.value * cdouble(0.0, 1.0), res.err_estimate + tail + 2.0 * widths[axis] * inner_err};
    };
    auto [value, err] = level(0);
    QuadMeta meta;
    meta.eps.assign(eps.begin(), eps.end());
    meta.half_width = *std::max_element(widths.begin(), widths.end());
    meta.nodes = nodes;
    return EvalResult{value, err, meta};
}

EvalResult integrate_halfline(const IntervalIntegrand& f, double decay, const QuadConfig& cfg) {
    const double T = cfg.half_width > 0 ? cfg.half_width : window_for(decay, cfg.tol());
    EvalResult r = integrate_interval(f, 0.0, T, cfg);
    r.err_estimate += std::abs(f(T)) / decay;
    r.meta.half_width = T;
    return r;
}

}  // namespace omzv
