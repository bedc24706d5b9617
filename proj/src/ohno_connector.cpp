#include "omzv/ohno_connector.hpp"

#include "omzv/errors.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

namespace omzv {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cdouble kI(0.0, 1.0);
constexpr double kMinusInf = -std::numeric_limits<double>::infinity();

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

cdouble ipow(cdouble z, int n) {
    cdouble r = 1.0;
    for (int i = 0; i < n; ++i) r *= z;
    return r;
}

// log G, with real part -inf at the zeros of G.
cdouble log_G_or_zero(cdouble z, const GammaContext& ctx) {
    if (ctx.G(z) == cdouble(0.0)) return {kMinusInf, 0.0};
    return ctx.log_G(z);
}

// 1 / log G, refusing zeros of G.
cdouble neg_log_G(cdouble z, const GammaContext& ctx, const char* what) {
    if (ctx.G(z) == cdouble(0.0)) throw PoleError(std::string(what) + ": G vanishes in a denominator");
    return -ctx.log_G(z);
}

cdouble safe_exp(cdouble z) { return z.real() == kMinusInf ? cdouble(0.0) : std::exp(z); }

// Decay rate of the connected and Ohno integrands along the contours.
double ohno_decay(const OmegaParam& p) { return z_decay(p); }

}  // namespace

cdouble ohno_variable(cdouble z, const OmegaParam& p) { return expm1(p.hbar() * z) / p.hbar(); }

// ---------------------------------------------------------------- tables

OhnoTable::OhnoTable(int order) : order_(order) {
    if (order < 0) throw DomainError("table order must be non-negative");
    for (int m = 0; m <= order; ++m)
        for (int n = 0; m + n <= order; ++n) cells_[{m, n}] = {0.0, 0.0};
}

void OhnoTable::check(int m, int n) const {
    if (m < 0 || n < 0 || m + n > order_)
        throw DomainError("cell (" + std::to_string(m) + "," + std::to_string(n) + ") outside a table of order " +
                          std::to_string(order_));
}

cdouble OhnoTable::at(int m, int n) const {
    check(m, n);
    return cells_.at({m, n}).first;
}

double OhnoTable::err(int m, int n) const {
    check(m, n);
    return cells_.at({m, n}).second;
}

void OhnoTable::set(int m, int n, cdouble value, double err) {
    check(m, n);
    cells_[{m, n}] = {value, err};
}

void OhnoTable::add(int m, int n, cdouble value, double err) {
    check(m, n);
    auto& c = cells_[{m, n}];
    c.first += value;
    c.second += err;
}

cdouble OhnoTable::evaluate(cdouble xi, cdouble eta) const {
    cdouble s = 0.0;
    for (const auto& [mn, v] : cells_) s += v.first * ipow(xi, mn.first) * ipow(eta, mn.second);
    return s;
}

std::pair<double, double> OhnoTable::max_difference(const OhnoTable& other) const {
    if (other.order_ != order_) throw DomainError("tables of different order");
    std::pair<double, double> worst{0.0, 0.0};
    for (const auto& [mn, v] : cells_) {
        const auto& w = other.cells_.at(mn);
        const double d = std::abs(v.first - w.first);
        if (d >= worst.first) worst = {d, v.second + w.second};
    }
    return worst;
}

// ---------------------------------------------------------------- Ohno sums

std::vector<std::vector<int>> compositions(int total, int parts) {
    if (total < 0 || parts < 1) throw DomainError("compositions need total >= 0 and at least one part");
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(parts), 0);
    auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
        if (pos + 1 == cur.size()) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, total);
    return out;
}

EvalResult double_ohno_sum(const Index& k, int m, int n, MzvEvaluator& zeta) {
    if (!k.admissible()) throw DomainError("index (" + k.str() + ") is not admissible");
    if (m < 0 || n < 0) throw DomainError("Ohno orders must be non-negative");
    EvalResult total = EvalResult::exact(0.0);
    const auto ms = compositions(m, k.depth());
    const auto ns = compositions(n, k.depth());
    for (const auto& a : ms) {
        for (const auto& b : ns) {
            std::vector<int> parts = k.parts;
            for (std::size_t j = 0; j < parts.size(); ++j) parts[j] += a[j] + b[j];
            const EvalResult r = zeta.zeta(Index(parts));
            total.value += r.value;
            total.err_estimate += r.err_estimate;
            total.meta.nodes += r.meta.nodes;
        }
    }
    return total;
}

EvalResult double_ohno_sum(const Index& k, int m, int n, const OmegaParam& p, const QuadConfig& cfg) {
    MzvEvaluator zeta(p, cfg);
    return double_ohno_sum(k, m, n, zeta);
}

OhnoTable ohno_table(const Index& k, int order, MzvEvaluator& zeta) {
    OhnoTable t(order);
    for (int m = 0; m <= order; ++m)
        for (int n = 0; m + n <= order; ++n) {
            const EvalResult r = double_ohno_sum(k, m, n, zeta);
            t.set(m, n, r.value, r.err_estimate);
        }
    return t;
}

// ---------------------------------------------------------------- generating integral

double ohno_eps(int depth, const OmegaParam& p, double requested) {
    if (depth < 1) throw DomainError("empty index");
    const double bound = 1.0 / (2.0 * depth * p.omega());
    if (requested > 0.0) {
        if (requested >= bound) throw DomainError("eps = " + fmt(requested) + " violates eps < 1/(2 r omega) = " + fmt(bound));
        return requested;
    }
    return std::min(0.45, 0.75 * bound);
}

void check_ohno_region(cdouble lam, cdouble mu, double eps) {
    const double radius = eps / (3.0 * kPi);
    if (!(std::abs(lam) < radius && std::abs(mu) < radius))
        throw DomainError("(lam, mu) outside the region |lam|, |mu| < eps/(3 pi) = " + fmt(radius));
}

cdouble ohno_J(int k, cdouble t, cdouble lam, cdouble mu, const OmegaParam& p) {
    if (k < 1) throw DomainError("index parts must be positive");
    const cdouble h = p.hbar();
    const cdouble dl = -expm1(h * (lam + t));
    const cdouble dm = -expm1(h * (mu + t));
    const cdouble d0 = -expm1(h * t);
    if (std::abs(dl) < 1e-14 || std::abs(dm) < 1e-14 || (k > 2 && std::abs(d0) < 1e-14))
        throw PoleError("J_" + std::to_string(k) + " evaluated at a pole");
    // e^{h(k-1)t} / (1 - e^{ht})^{k-2} = (e^{ht}/(1 - e^{ht}))^{k-2} e^{ht}, which
    // stays bounded where e^{ht} is large.
    cdouble v = std::exp(h * t) / (dl * dm);
    if (k >= 2) v *= ipow(inv_expm1(-h * t), k - 2);
    else v *= d0 * std::exp(-h * t);
    return v;
}

EvalResult ohno_generating(const Index& k, const OhnoParams& op, const OmegaParam& p, const QuadConfig& cfg) {
    if (!k.admissible()) throw DomainError("index (" + k.str() + ") is not admissible");
    const int r = k.depth();
    if (r > cfg.max_dim)
        throw DomainError("integral of dimension " + std::to_string(r) + " exceeds the configured maximum " +
                          std::to_string(cfg.max_dim));
    const double eps = ohno_eps(r, p, op.eps);
    check_ohno_region(op.lam, op.mu, eps);
    const double lm = std::max(std::abs(op.lam), std::abs(op.mu));
    std::vector<ChainStep> steps;
    int order = 1;
    for (int part : k.parts) {
        const cdouble lam = op.lam, mu = op.mu;
        steps.push_back({contour_measure, [part, lam, mu, p](cdouble T) { return ohno_J(part, T, lam, mu, p); }});
        order = std::max(order, part);
    }
    ChainSpec spec{eps, std::min({eps - lm, 1.0 - eps, 1.0 / p.omega() - r * eps - lm}), ohno_decay(p), order};
    EvalResult res = integrate_chain(steps, spec, cfg);
    const cdouble scale = ipow(p.hbar(), k.weight());
    res.value *= scale;
    res.err_estimate *= std::abs(scale);
    return res;
}

EvalResult ohno_series(const Index& k, const OhnoParams& op, MzvEvaluator& zeta) {
    const OmegaParam& p = zeta.param();
    const cdouble L = ohno_variable(op.lam, p);
    const cdouble M = ohno_variable(op.mu, p);
    const OhnoTable t = ohno_table(k, op.order, zeta);
    EvalResult res = EvalResult::exact(0.0);
    double top = 0.0, below = 0.0;
    for (const auto& [mn, v] : t.cells()) {
        const cdouble mono = ipow(L, mn.first) * ipow(M, mn.second);
        res.value += v.first * mono;
        res.err_estimate += v.second * std::abs(mono);
        if (mn.first + mn.second == op.order) top = std::max(top, std::abs(v.first));
        if (mn.first + mn.second == op.order - 1) below = std::max(below, std::abs(v.first));
    }
    // Omitted orders, extrapolated from the growth of the last two.
    const double rho = std::max(std::abs(L), std::abs(M));
    const double growth = below > 0.0 ? std::max(1.0, top / below) : 1.0;
    res.err_estimate += (op.order + 2) * top * growth * std::pow(rho, op.order + 1);
    return res;
}

cdouble d_norm(cdouble lam, cdouble mu, const GammaContext& ctx) {
    const double omega = ctx.omega();
    const double wb = ctx.omega_bar();
    return kI / std::sqrt(omega) * std::exp(kI * kPi * omega * (lam + mu - lam * mu)) *
           ctx.G(kI * (wb - lam - 1.0 / omega)) * ctx.G(kI * (wb - mu - 1.0 / omega));
}

// ---------------------------------------------------------------- connected integral

double connected_eps(int variables, const OmegaParam& p, double requested) {
    if (variables < 2) throw DomainError("connected integrals need two non-empty indices");
    const double bound = p.unit_min() / (variables + 2);
    if (requested > 0.0) {
        if (requested >= bound)
            throw DomainError("eps = " + fmt(requested) + " violates (r+s+2) eps < min(1, 1/omega), eps < " + fmt(bound));
        return requested;
    }
    return 0.8 * bound;
}

namespace {

// Steps of one side of the connected integral: J kernels on all partial sums
// but the last, which carries (e^{hT}/(1 - e^{hT}))^{k_r - 1}.
std::vector<ChainStep> connected_side(const Index& k, cdouble lam, cdouble mu, const OmegaParam& p) {
    std::vector<ChainStep> steps;
    for (int a = 0; a < k.depth(); ++a) {
        const int part = k.parts[static_cast<std::size_t>(a)];
        if (a + 1 < k.depth())
            steps.push_back({contour_measure, [part, lam, mu, p](cdouble T) { return ohno_J(part, T, lam, mu, p); }});
        else
            steps.push_back({contour_measure, [part, p](cdouble T) { return ipow(inv_expm1(-p.hbar() * T), part - 1); }});
    }
    return steps;
}

}  // namespace

EvalResult connected_integral(const Index& k, const Index& l, const OhnoParams& op, const GammaContext& ctx,
                              const QuadConfig& cfg) {
    cfg.validate();
    if (k.parts.empty() || l.parts.empty()) throw DomainError("connected integrals need two non-empty indices");
    const OmegaParam& p = ctx.param();
    const int r = k.depth(), s = l.depth();
    if (r + s > cfg.max_dim)
        throw DomainError("integral of dimension " + std::to_string(r + s) + " exceeds the configured maximum " +
                          std::to_string(cfg.max_dim));
    const double eps = connected_eps(r + s, p, op.eps);
    const cdouble lam = op.lam, mu = op.mu;
    const double lm = std::max(std::abs(lam), std::abs(mu));
    if (!(lm < eps)) throw DomainError("connected integral needs |lam|, |mu| < eps = " + fmt(eps));

    const double d = std::min({eps - lm, 1.0 - eps, 1.0 / p.omega() - (r + s) * eps - 2.0 * lm});
    const double decay = ohno_decay(p);
    int order = 1;
    for (int part : k.parts) order = std::max(order, part);
    for (int part : l.parts) order = std::max(order, part);
    const ChainSpec spec{eps, d, decay, order};
    const ChainGrid grid = make_chain_grid(eps, d, chain_half_width(spec, cfg), cfg.tol());
    const ChainGrid coarse = grid.coarsened();
    const ChainGrid inner = inner_grid(grid);

    const auto t_steps = connected_side(k, lam, mu, p);
    const auto u_steps = connected_side(l, lam, mu, p);
    const auto vt = chain_vectors(t_steps, grid).back();
    const auto vu = chain_vectors(u_steps, grid).back();
    const auto vt_c = chain_vectors(t_steps, coarse).back();
    const auto vu_c = chain_vectors(u_steps, coarse).back();
    const auto vt_i = chain_vectors(t_steps, inner).back();
    const auto vu_i = chain_vectors(u_steps, inner).back();

    const int n = grid.size();
    const int offset = grid.half_count - inner.half_count;
    const double wb = ctx.omega_bar();
    const double omega = p.omega();
    auto gamma_arg = [&](cdouble x) { return kI * (wb + x); };
    auto side_log = [&](int depth) {
        std::vector<cdouble> out(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            const cdouble T = grid.point(depth, i);
            out[static_cast<std::size_t>(i)] = log_G_or_zero(gamma_arg(T), ctx) +
                                               neg_log_G(gamma_arg(T + lam), ctx, "connected kernel") +
                                               neg_log_G(gamma_arg(T + mu), ctx, "connected kernel");
        }
        return out;
    };
    const auto at = side_log(r);
    const auto au = s == r ? at : side_log(s);
    // Terms depending on t + u only, on the line Re = -(r + s) eps.
    std::vector<cdouble> joint(static_cast<std::size_t>(2 * n - 1));
    for (int q = 0; q < 2 * n - 1; ++q) {
        const cdouble S = cdouble(-(r + s) * eps, (q - 2 * grid.half_count) * grid.step) + lam + mu;
        const cdouble denom = -expm1(p.hbar() * S);
        if (std::abs(denom) < 1e-14) throw PoleError("connected kernel is singular on the contour");
        joint[static_cast<std::size_t>(q)] = log_G_or_zero(gamma_arg(S), ctx) - std::log(denom);
    }

    ChainRuns runs;
    for (int i = 0; i < n; ++i) {
        const cdouble T = grid.point(r, i);
        cdouble row = 0.0, row_c = 0.0, row_i = 0.0;
        double row_abs = 0.0;
        const bool i_even = (i % 2) == 0;
        const bool i_inner = i >= offset && i < n - offset;
        for (int j = 0; j < n; ++j) {
            const cdouble U = grid.point(s, j);
            const cdouble theta = safe_exp(-kI * kPi * omega * T * U + at[static_cast<std::size_t>(i)] +
                                           au[static_cast<std::size_t>(j)] + joint[static_cast<std::size_t>(i + j)]);
            const cdouble term = theta * vu[static_cast<std::size_t>(j)];
            row += term;
            row_abs += std::abs(term);
            if (i_even && j % 2 == 0) row_c += theta * vu_c[static_cast<std::size_t>(j / 2)];
            if (i_inner && j >= offset && j < n - offset) row_i += theta * vu_i[static_cast<std::size_t>(j - offset)];
        }
        runs.fine += vt[static_cast<std::size_t>(i)] * row;
        runs.l1 += std::abs(vt[static_cast<std::size_t>(i)]) * row_abs;
        if (i_even) runs.coarse += vt_c[static_cast<std::size_t>(i / 2)] * row_c;
        if (i_inner) runs.inner += vt_i[static_cast<std::size_t>(i - offset)] * row_i;
    }
    runs.steps = r + s;
    runs.pole_order = order;
    const ChainErrors err = chain_errors(runs, grid, d, decay);

    const cdouble scale = ipow(p.hbar(), k.weight() + l.weight());
    QuadMeta meta;
    meta.eps.assign(static_cast<std::size_t>(r + s), eps);
    meta.half_width = grid.half_count * grid.step;
    meta.nodes = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    meta.step = grid.step;
    return EvalResult{runs.fine * scale, err.total() * std::abs(scale), meta};
}

// ---------------------------------------------------------------- Saalschutz

SaalschutzResult saalschutz_check(cdouble u1, cdouble u2, cdouble u4, cdouble u5, const GammaContext& ctx,
                                  const QuadConfig& cfg, double shift) {
    const double omega = ctx.omega();
    const double wb = ctx.omega_bar();
    const cdouble S = u1 + u2 + u4 + u5;
    // Poles at -u_j + i wb + ... lie above the contour, u_k - i wb - ... below.
    const double above = std::min(wb - u1.imag(), wb - u2.imag()) - shift;
    const double below = shift - std::max(u4.imag(), u5.imag()) + wb;
    const double dist = std::min(above, below);
    if (!(dist > 0.0))
        throw DomainError("the line Im u = " + fmt(shift) + " does not separate the two pole families");
    const double rate_plus = 2.0 * kPi * (1.0 + omega);
    const double rate_minus = kPi * omega * (2.0 * S.imag() - 4.0 * wb);
    if (!(rate_minus > 0.0))
        throw DomainError("the integral diverges unless Im(u1 + u2 + u4 + u5) > 2 omega_bar");

    auto f = [&](double x) {
        const cdouble u(x, shift);
        const cdouble lg = (4.0 * kI * wb - S) * kI * kPi * omega * u + log_G_or_zero(u - u4, ctx) +
                           log_G_or_zero(u - u5, ctx) + neg_log_G(u + u1, ctx, "Saalschutz integrand") +
                           neg_log_G(u + u2, ctx, "Saalschutz integrand");
        return safe_exp(lg);
    };
    const double reach = std::max({u4.real(), u5.real(), -u1.real(), -u2.real(), 0.0}) + std::max(1.0, 1.0 / omega);
    const double log_tol = std::log(1.0 / cfg.tol());
    const double hi = reach + log_tol / rate_plus;
    const double lo = -(reach + log_tol / rate_minus);
    SaalschutzResult out;
    out.lhs = integrate_interval(f, lo, hi, cfg);
    out.lhs.err_estimate += std::abs(f(lo)) / rate_minus + std::abs(f(hi)) / rate_plus;
    out.lhs.meta.eps = {shift};
    out.lhs.meta.half_width = std::max(hi, -lo);
    out.min_pole_distance = dist;

    cdouble lr = (u1 * u2 - u4 * u5 + kI * wb * (u4 + u5 - u1 - u2)) * kI * kPi * omega - 0.5 * std::log(omega) +
                 log_G_or_zero(-3.0 * kI * wb + S, ctx);
    for (cdouble uj : {u1, u2})
        for (cdouble uk : {u4, u5}) lr += log_G_or_zero(kI * wb - uj - uk, ctx);
    out.rhs = safe_exp(lr);
    return out;
}

std::vector<std::array<cdouble, 4>> saalschutz_presets(const OmegaParam& p) {
    const double wb = p.omega_bar();
    const std::array<std::array<double, 4>, 3> re{{{0.1, -0.2, 0.15, 0.05}, {-0.15, 0.25, 0.05, -0.1}, {0.2, 0.05, -0.25, 0.1}}};
    const std::array<std::array<double, 4>, 3> im{{{0.70, 0.65, 0.72, 0.68}, {0.60, 0.75, 0.70, 0.62}, {0.74, 0.70, 0.78, 0.74}}};
    std::vector<std::array<cdouble, 4>> out;
    for (std::size_t a = 0; a < 3; ++a) {
        std::array<cdouble, 4> pt;
        for (std::size_t j = 0; j < 4; ++j) pt[j] = cdouble(re[a][j], im[a][j] * wb);
        out.push_back(pt);
    }
    return out;
}

// ---------------------------------------------------------------- Omega map

OhnoTable omega_Omega(const XSeries& w, int order, MzvEvaluator& zeta) {
    OhnoTable out(order);
    std::map<std::pair<Index, int>, OhnoTable> tables;
    for (int j = 0; j <= w.order() && 2 * j <= order; ++j) {
        for (const auto& [word, coeff] : w.coefficient(j)) {
            const Index k = z_decompose(word);
            if (!k.admissible()) throw DomainError("word " + word.str() + " does not end with x");
            const int sub = order - 2 * j;
            auto it = tables.find({k, sub});
            if (it == tables.end()) it = tables.emplace(std::make_pair(k, sub), ohno_table(k, sub, zeta)).first;
            const double c = coeff.get_d();
            for (const auto& [mn, v] : it->second.cells())
                out.add(mn.first + j, mn.second + j, c * v.first, std::abs(c) * v.second);
        }
    }
    return out;
}

// ---------------------------------------------------------------- relations

namespace {

Index appended_one(const Index& k) { return k.extended(); }
Index appended_two(const Index& k) { return k.extended().raised(); }

OhnoParams with_eps(const OhnoParams& op, int max_variables, const OmegaParam& p) {
    OhnoParams q = op;
    q.eps = connected_eps(max_variables, p, op.eps);
    return q;
}

}  // namespace

RelationCheck initial_relation(const Index& k, const OhnoParams& op, const GammaContext& ctx, const QuadConfig& cfg) {
    const EvalResult lhs = connected_integral(k, Index{1}, op, ctx, cfg);
    OhnoParams oq = op;
    oq.eps = 0.0;
    const EvalResult o = ohno_generating(k.raised(), oq, ctx.param(), cfg);
    const cdouble d = d_norm(op.lam, op.mu, ctx);
    return {lhs.value, d * o.value, lhs.err_estimate + std::abs(d) * o.err_estimate};
}

RelationCheck transport_first(const Index& k, const Index& l, const OhnoParams& op, const GammaContext& ctx,
                              const QuadConfig& cfg) {
    const OmegaParam& p = ctx.param();
    const OhnoParams q = with_eps(op, k.depth() + 1 + l.depth(), p);
    const cdouble lm = ohno_variable(op.lam, p) * ohno_variable(op.mu, p);
    const EvalResult a = connected_integral(appended_one(k), l, q, ctx, cfg);
    const EvalResult b = connected_integral(k, l.raised(), q, ctx, cfg);
    const EvalResult c = connected_integral(appended_two(k), l.raised(), q, ctx, cfg);
    return {a.value, b.value + lm * c.value, a.err_estimate + b.err_estimate + std::abs(lm) * c.err_estimate};
}

RelationCheck transport_second(const Index& k, const Index& l, const OhnoParams& op, const GammaContext& ctx,
                               const QuadConfig& cfg) {
    const OmegaParam& p = ctx.param();
    const OhnoParams q = with_eps(op, k.depth() + l.depth() + 1, p);
    const cdouble lm = ohno_variable(op.lam, p) * ohno_variable(op.mu, p);
    const EvalResult a = connected_integral(k.raised(), l, q, ctx, cfg);
    const EvalResult b = connected_integral(k, appended_one(l), q, ctx, cfg);
    const EvalResult c = connected_integral(k.raised(), appended_two(l), q, ctx, cfg);
    return {a.value, b.value - lm * c.value, a.err_estimate + b.err_estimate + std::abs(lm) * c.err_estimate};
}

ExpansionFit connected_expansion(const Index& k, const Index& l, int order, const GammaContext& ctx,
                                 const QuadConfig& cfg, double radius, double eps) {
    if (order < 0 || order > 2) throw DomainError("expansion order must be 0, 1 or 2");
    if (!(radius > 0.0)) throw DomainError("radius must be positive");
    const OmegaParam& p = ctx.param();
    std::vector<std::pair<int, int>> cells;
    for (int m = 0; m <= order; ++m)
        for (int n = 0; m + n <= order; ++n) cells.emplace_back(m, n);
    // Points on two circles with unrelated phases. Using order + 2 phases per
    // axis keeps the first neglected degree from aliasing onto fitted cells.
    const int per_axis = order + 2;
    std::vector<std::pair<cdouble, cdouble>> points;
    for (int a = 0; a < per_axis; ++a)
        for (int b = 0; b < per_axis; ++b)
            points.emplace_back(std::polar(radius, 2.0 * kPi * a / per_axis + 0.3),
                                std::polar(radius, 2.0 * kPi * b / per_axis + 1.1));

    const auto rows = static_cast<Eigen::Index>(points.size());
    const auto cols = static_cast<Eigen::Index>(cells.size());
    Eigen::MatrixXcd A(rows, cols);
    Eigen::VectorXcd rhs(rows);
    double err = 0.0;
    for (Eigen::Index i = 0; i < rows; ++i) {
        const auto [lam, mu] = points[static_cast<std::size_t>(i)];
        const EvalResult v = connected_integral(k, l, OhnoParams{lam, mu, order, eps}, ctx, cfg);
        const cdouble d = d_norm(lam, mu, ctx);
        rhs(i) = v.value / d;
        err = std::max(err, v.err_estimate / std::abs(d));
        const cdouble L = ohno_variable(lam, p) / radius;
        const cdouble M = ohno_variable(mu, p) / radius;
        for (Eigen::Index c = 0; c < cols; ++c) {
            const auto [m, n] = cells[static_cast<std::size_t>(c)];
            A(i, c) = ipow(L, m) * ipow(M, n);
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    ExpansionFit fit{OhnoTable(order), sv(0) / sv(sv.size() - 1), 0.0};
    if (!(fit.condition < 1e8)) throw ConvergenceError("expansion fit is ill-conditioned (condition " + fmt(fit.condition) + ")");
    const Eigen::VectorXcd x = svd.solve(rhs);
    fit.fit_residual = (A * x - rhs).norm();
    for (Eigen::Index c = 0; c < cols; ++c) {
        const auto [m, n] = cells[static_cast<std::size_t>(c)];
        const double scale = std::pow(radius, -(m + n));
        fit.table.set(m, n, x(c) * scale, (err * fit.condition + fit.fit_residual) * scale);
    }
    return fit;
}

}  // namespace omzv
