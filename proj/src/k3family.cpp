#include "k3atlas/k3family.hpp"

#include <cmath>

#include "k3atlas/forms.hpp"

namespace k3atlas::k3 {

using xp::MPoly;
using xp::Rat;

const xp::VarContextPtr& family_context() {
    static const auto ctx = xp::make_context({"alpha", "beta", "gamma", "delta", "x", "y", "z", "w"});
    return ctx;
}

const xp::VarContextPtr& lambda_context() {
    static const auto ctx = xp::make_context({"alpha", "beta", "gamma", "delta", "lambda"});
    return ctx;
}

const xp::VarContextPtr& mu_context() {
    static const auto ctx = xp::make_context({"alpha", "beta", "gamma", "delta", "mu"});
    return ctx;
}

namespace {

MPoly pp(const xp::VarContextPtr& ctx, const std::string& src) {
    return xp::parse_poly(src, ctx);
}

} // namespace

const MPoly& quartic_polynomial_sym() {
    static const MPoly q = [] {
        const auto& ctx = family_context();
        MPoly p = pp(ctx, "y^2*z*w - 4*x^3*z + 3*alpha*x*z*w^2 + beta*z*w^3 + gamma*x*z^2*w");
        p += pp(ctx, "delta*z^2*w^2 + w^4") * Rat(-1, 2);
        return p;
    }();
    return q;
}

Complex quartic_value(const K3Params& p, const std::array<Complex, 4>& pt) {
    std::vector<std::optional<Complex>> b{p.alpha, p.beta, p.gamma, p.delta,
                                          pt[0], pt[1], pt[2], pt[3]};
    return quartic_polynomial_sym().eval(b);
}

WeierstrassFibration standard_fibration_sym() {
    const auto& ctx = lambda_context();
    WeierstrassFibration w;
    w.f = pp(ctx, "gamma*lambda^5 + 3*alpha*lambda^4");
    w.g = -pp(ctx, "delta*lambda^7 - 2*beta*lambda^6 + lambda^5");
    w.disc = w.f.pow(3) * Rat(4) + w.g.pow(2) * Rat(27);
    return w;
}

std::pair<WeierstrassFibration, TwoTorsionFibration> alternate_fibration_sym() {
    const auto& ctx = mu_context();
    WeierstrassFibration w;
    w.f = pp(ctx, "-64*mu^6 + 96*alpha*mu^4 + 32*beta*mu^3 - 36*alpha^2*mu^2"
                  " - 24*alpha*beta*mu - 6*gamma*mu - 4*beta^2 + 3*delta") *
          Rat(1, 12);
    w.g = pp(ctx, "4*mu^3 - 3*alpha*mu - beta") *
          pp(ctx, "128*mu^6 - 192*alpha*mu^4 - 64*beta*mu^3 + 72*alpha^2*mu^2"
                  " + 48*alpha*beta*mu + 18*gamma*mu + 8*beta^2 - 9*delta") *
          Rat(1, 108);
    w.disc = w.f.pow(3) * Rat(4) + w.g.pow(2) * Rat(27);

    TwoTorsionFibration t;
    t.P = pp(ctx, "4*mu^3 - 3*alpha*mu - beta");
    t.Q = pp(ctx, "delta - 2*gamma*mu") * Rat(1, 4);
    return {w, t};
}

TwoTorsionFibration two_isogeny_quotient(const TwoTorsionFibration& f) {
    TwoTorsionFibration out;
    out.P = f.P * Rat(-2);
    out.Q = f.P.pow(2) - f.Q * Rat(4);
    return out;
}

std::pair<Complex, Complex> two_isogeny_image(Complex q_at_mu, Complex z1, Complex y1) {
    if (z1 == Complex(0.0, 0.0)) throw DomainError("two-isogeny image undefined at z1 = 0");
    const Complex z2 = y1 * y1 / (z1 * z1);
    const Complex y2 = (q_at_mu - z1 * z1) * y1 / (z1 * z1);
    return {z2, y2};
}

std::array<Complex, 4> vgs_involution_apply(const K3Params& p,
                                            const std::array<Complex, 4>& pt) {
    const Complex x = pt[0], y = pt[1], z = pt[2], w = pt[3];
    const Complex lin = p.delta * w - 2.0 * p.gamma * x;
    const std::array<Complex, 4> out{x * z * lin, -y * z * lin, w * w * w, z * w * lin};
    double mag = 0.0, in_mag = 0.0;
    for (int i = 0; i < 4; ++i) {
        mag = std::max(mag, std::abs(out[i]));
        in_mag = std::max(in_mag, std::abs(pt[i]));
    }
    if (mag <= 1e-14 * std::pow(in_mag, 3) * (std::abs(p.delta) + std::abs(p.gamma) + 1.0))
        throw IndeterminacyError("involution applied at an indeterminacy point");
    return out;
}

const MPoly& d4_polynomial() {
    static const MPoly d4 = [] {
        auto ctx = xp::make_context({"alpha", "beta", "gamma", "delta"});
        return xp::parse_poly(
            "-23328*alpha^6*beta*gamma^3 + 46656*alpha^3*beta^3*gamma^3 - 23328*beta^5*gamma^3"
            " - 3888*alpha^5*gamma^4 + 97200*alpha^2*beta^2*gamma^4 + 33750*alpha*beta*gamma^5"
            " + 3125*gamma^6 - 34992*alpha^7*gamma^2*delta + 69984*alpha^4*beta^2*gamma^2*delta"
            " - 34992*alpha*beta^4*gamma^2*delta + 184680*alpha^3*beta*gamma^3*delta"
            " + 48600*beta^3*gamma^3*delta + 37125*alpha^2*gamma^4*delta"
            " + 71928*alpha^4*gamma^2*delta^2 + 68040*alpha*beta^2*gamma^2*delta^2"
            " - 27000*beta*gamma^3*delta^2 + 11664*alpha^6*delta^3 - 23328*alpha^3*beta^2*delta^3"
            " + 11664*beta^4*delta^3 - 46656*alpha^2*beta*gamma*delta^3"
            " - 48600*alpha*gamma^2*delta^3 - 23328*alpha^3*delta^4 - 23328*beta^2*delta^4"
            " + 11664*delta^5",
            ctx);
    }();
    return d4;
}

const MPoly& overlap_polynomial() {
    static const MPoly s = [] {
        auto ctx = xp::make_context({"alpha", "beta", "gamma", "delta"});
        return xp::parse_poly("alpha^6 + beta^4 + delta^2 - 2*alpha^3*beta^2"
                              " - 2*alpha^3*delta - 2*beta^2*delta",
                              ctx);
    }();
    return s;
}

namespace {

Complex eval_params(const MPoly& p, const K3Params& k) {
    std::vector<std::optional<Complex>> b{k.alpha, k.beta, k.gamma, k.delta};
    return p.eval(b);
}

// Weight-5-consistent magnitude of a parameter point, for gamma thresholds.
double weight5_scale(const K3Params& k) {
    return std::max({std::pow(std::abs(k.alpha), 2.5), std::pow(std::abs(k.beta), 5.0 / 3.0),
                     std::pow(std::abs(k.delta), 5.0 / 6.0)});
}

} // namespace

FiberReport fiber_report(const K3Params& p, double tol) {
    if (!p.is_k3(0.0)) throw DomainError("gamma = delta = 0: rational surface");
    FiberReport rep;
    // flags are computed on the normalized weighted point so they are
    // invariant under the weighted rescaling
    WeightedPoint wp({p.alpha, p.beta, p.gamma, p.delta}, {2, 3, 5, 6});
    const WeightedPoint n = wp_normalize(wp);
    const K3Params q{n.coords[0], n.coords[1], n.coords[2], n.coords[3]};

    const bool gamma_zero = std::abs(q.gamma) <= tol * std::max(1.0, weight5_scale(q));
    rep.on_d1 = gamma_zero;
    rep.standard_at_0 = "II*";
    rep.standard_at_infinity = gamma_zero ? "II*" : "III*";
    rep.alternate_at_infinity = gamma_zero ? "I12*" : "I10*";
    if (!gamma_zero) {
        rep.has_extra_fiber = true;
        rep.i2_iii_discriminant = 3.0 * q.alpha * q.gamma * q.gamma * q.delta +
                                  2.0 * q.beta * q.gamma * q.gamma * q.gamma -
                                  q.delta * q.delta * q.delta;
        const double scale = std::abs(q.alpha * q.gamma * q.gamma * q.delta) +
                             std::abs(q.beta * q.gamma * q.gamma * q.gamma) +
                             std::abs(q.delta * q.delta * q.delta) + 1e-300;
        rep.extra_fiber_type =
            (std::abs(rep.i2_iii_discriminant) <= tol * scale) ? "III" : "I2";
    }
    rep.d4_value = eval_params(d4_polynomial(), q);
    rep.on_d4 = std::abs(rep.d4_value) <= 1e-6;
    rep.on_overlap = gamma_zero && std::abs(eval_params(overlap_polynomial(), q)) <= 1e-8;

    // factorization data: cofactor coefficients at the normalized point
    const Complex a = q.alpha, b = q.beta, g = q.gamma, d = q.delta;
    rep.standard_quintic_cofactor = {4.0 * g * g * g,
                                     36.0 * a * g * g + 27.0 * d * d,
                                     108.0 * a * a * g - 108.0 * b * d,
                                     108.0 * a * a * a + 108.0 * b * b + 54.0 * d,
                                     Complex(-108.0) * b,
                                     Complex(27.0)};
    rep.alternate_sextic_cofactor = {Complex(16.0),
                                     Complex(0.0),
                                     -24.0 * a,
                                     -8.0 * b,
                                     9.0 * a * a,
                                     2.0 * (3.0 * a * b + g),
                                     b * b - d};
    return rep;
}

InversePeriod inverse_period(const SiegelPoint& kappa, double eps) {
    const auto f = forms::evaluate_forms(kappa, eps);
    InversePeriod out;
    out.point = WeightedPoint({f.E4, f.E6, std::pow(2.0, 12) * std::pow(3.0, 5) * f.C10,
                               std::pow(2.0, 12) * std::pow(3.0, 6) * f.C12},
                              {2, 3, 5, 6});
    const WeightedPoint n = wp_normalize(out.point);
    const K3Params q{n.coords[0], n.coords[1], n.coords[2], n.coords[3]};
    out.h1 = std::abs(q.gamma) < 1e-8 * std::max(1e-300, weight5_scale(q));
    return out;
}

IgusaClebsch ic_from_params(const K3Params& p) {
    if (p.gamma == Complex(0.0, 0.0))
        throw DomainError("gamma = 0: product abelian surface, use split_j_pair");
    const Complex g2 = p.gamma * p.gamma;
    IgusaClebsch ic;
    ic.A = 24.0 * p.delta;
    ic.B = 36.0 * p.alpha * g2;
    ic.C = 72.0 * (4.0 * p.alpha * p.delta + p.beta * p.gamma) * g2;
    ic.D = 4.0 * g2 * g2 * g2;
    return ic;
}

IgusaClebsch ic_from_forms(const SiegelPoint& kappa, double eps) {
    const auto f = forms::evaluate_forms(kappa, eps);
    const double floor10 =
        std::pow(std::abs(f.E4), 2.5) + std::pow(std::abs(f.E6), 5.0 / 3.0) + 1e-300;
    if (std::abs(f.C10) <= 1e-10 * floor10)
        throw HumbertError("C10 vanishes: period point on the product locus");
    IgusaClebsch ic;
    ic.A = 24.0 * f.C12 / f.C10;
    ic.B = 4.0 * f.E4;
    ic.C = 32.0 * f.E4 * f.C12 / f.C10 + (8.0 / 3.0) * f.E6;
    ic.D = std::pow(2.0, 14) * f.C10;
    return ic;
}

std::pair<Complex, Complex> split_j_pair(const K3Params& p) {
    if (std::abs(p.delta) == 0.0) throw DomainError("delta = 0 in the split case");
    const Complex a3 = p.alpha * p.alpha * p.alpha;
    const Complex sum = (a3 - p.beta * p.beta) / p.delta + 1.0;
    const Complex prod = a3 / p.delta;
    const Complex disc = std::sqrt(sum * sum - 4.0 * prod);
    // normalized roots (j(i) = 1); classical j is 1728 times larger
    const Complex j1 = 0.5 * (sum + disc) * 1728.0;
    const Complex j2 = 0.5 * (sum - disc) * 1728.0;
    return {j1, j2};
}

std::vector<xp::IdentityReport> family_exact_checks() {
    std::vector<xp::IdentityReport> out;
    const auto& fam = family_context();

    // --- standard fibration discriminant, derived expansion
    {
        const auto w = standard_fibration_sym();
        const auto& ctx = lambda_context();
        MPoly rhs = pp(ctx, "lambda^10") *
                    (pp(ctx, "4*gamma^3*lambda^5") +
                     pp(ctx, "36*alpha*gamma^2*lambda^4 + 27*delta^2*lambda^4") +
                     pp(ctx, "108*alpha^2*gamma*lambda^3 - 108*beta*delta*lambda^3") +
                     pp(ctx, "108*alpha^3*lambda^2 + 108*beta^2*lambda^2 + 54*delta*lambda^2") +
                     pp(ctx, "27 - 108*beta*lambda"));
        out.push_back(identity_check("standard_disc_expansion", w.disc, rhs));
        // the printed lambda^4..lambda^2 alpha-terms (48, 192, 256) do not
        // match f_s; this names the discrepancy as an expected failure
        MPoly printed = pp(ctx, "lambda^10") *
                        (pp(ctx, "4*gamma^3*lambda^5") +
                         pp(ctx, "48*alpha*gamma^2*lambda^4 + 27*delta^2*lambda^4") +
                         pp(ctx, "192*alpha^2*gamma*lambda^3 - 108*beta*delta*lambda^3") +
                         pp(ctx, "256*alpha^3*lambda^2 + 108*beta^2*lambda^2 + 54*delta*lambda^2") +
                         pp(ctx, "27 - 108*beta*lambda"));
        auto probe = identity_check("standard_disc_printed_display_probe", w.disc, printed);
        probe.witness = probe.pass
                            ? "printed display unexpectedly matches"
                            : "display typo confirmed; the derived expansion governs";
        probe.pass = !probe.pass; // the printed display is expected to mismatch
        out.push_back(probe);
    }

    // --- alternate fibration: printed disc identity and the two-torsion
    // presentation defining the same discriminant divisor
    {
        const auto [w, t] = alternate_fibration_sym();
        const auto& ctx = mu_context();
        MPoly sext = pp(ctx, "16*mu^6 - 24*alpha*mu^4 - 8*beta*mu^3 + 9*alpha^2*mu^2"
                             " + 6*alpha*beta*mu + 2*gamma*mu + beta^2 - delta");
        MPoly lin = pp(ctx, "2*gamma*mu - delta");
        out.push_back(identity_check("alternate_disc_printed_identity", w.disc,
                                     lin.pow(2) * sext * Rat(-1, 16)));
        out.push_back(identity_check("alternate_two_torsion_f",
                                     w.f, t.Q - t.P.pow(2) * Rat(1, 3)));
        out.push_back(identity_check("alternate_two_torsion_g", w.g,
                                     t.P.pow(3) * Rat(2, 27) - t.P * t.Q * Rat(1, 3)));
        out.push_back(identity_check("alternate_disc_divisor_proportionality", w.disc,
                                     -(t.Q.pow(2) * (t.P.pow(2) - t.Q * Rat(4)))));
        // the Q-root mu = delta/(2 gamma) is the (2 gamma mu - delta) locus
        out.push_back(identity_check("two_torsion_q_linear_factor", t.Q * Rat(-4), lin));
    }

    // --- weighted rescaling covariance (exact, with q^2 = t)
    {
        auto ctx = xp::make_context(
            {"alpha", "beta", "gamma", "delta", "x", "y", "z", "w", "q"});
        std::vector<std::optional<MPoly>> to_scaled(8), to_moved(8);
        auto v = [&](const std::string& s) { return xp::parse_poly(s, ctx); };
        to_scaled[0] = v("q^4*alpha");
        to_scaled[1] = v("q^6*beta");
        to_scaled[2] = v("q^10*gamma");
        to_scaled[3] = v("q^12*delta");
        to_moved[4] = v("q^8*x");
        to_moved[5] = v("q^9*y");
        to_moved[6] = v("z");
        to_moved[7] = v("q^6*w");
        const MPoly lhs = quartic_polynomial_sym().substitute(to_scaled, ctx)
                              .substitute(std::vector<std::optional<MPoly>>{
                                              std::nullopt, std::nullopt, std::nullopt,
                                              std::nullopt, to_moved[4], to_moved[5],
                                              to_moved[6], to_moved[7], std::nullopt},
                                          ctx);
        const MPoly rhs =
            quartic_polynomial_sym().substitute(std::vector<std::optional<MPoly>>(8), ctx) *
            v("q^24");
        out.push_back(identity_check("weighted_rescaling_covariance", lhs, rhs));
    }

    // --- involution: square proportional to the identity, quartic invariance
    {
        const auto& ctx = fam;
        const MPoly x = pp(ctx, "x"), y = pp(ctx, "y"), z = pp(ctx, "z"), w = pp(ctx, "w");
        const MPoly lin = pp(ctx, "delta*w - 2*gamma*x");
        const std::array<MPoly, 4> psi{x * z * lin, -(y * z * lin), w.pow(3), z * w * lin};
        std::vector<std::optional<MPoly>> bind(8);
        for (int i = 0; i < 4; ++i) bind[4 + i] = psi[i];
        std::array<MPoly, 4> psi2;
        for (int i = 0; i < 4; ++i) psi2[i] = psi[i].substitute(bind, ctx);
        const MPoly common = z.pow(2) * w.pow(3) * lin.pow(3);
        out.push_back(identity_check("involution_square_x", psi2[0], common * x));
        out.push_back(identity_check("involution_square_y", psi2[1], common * y));
        out.push_back(identity_check("involution_square_z", psi2[2], common * z));
        out.push_back(identity_check("involution_square_w", psi2[3], common * w));

        const MPoly pulled = quartic_polynomial_sym().substitute(bind, ctx);
        auto quot = pulled.divide_exact(quartic_polynomial_sym());
        xp::IdentityReport inv;
        inv.name = "involution_preserves_quartic";
        inv.pass = quot.has_value();
        if (quot) {
            // witness: the exact cofactor reproduces the pullback
            inv.pass = (*quot * quartic_polynomial_sym() == pulled) && !quot->is_zero();
        }
        out.push_back(inv);

        out.push_back(identity_check("involution_fixes_base_coordinate",
                                     psi[0] * w, x * psi[3]));
    }

    // --- two-isogeny double application = multiplication-by-(4, 16)
    {
        const auto [w, t] = alternate_fibration_sym();
        (void)w;
        const auto once = two_isogeny_quotient(t);
        const auto twice = two_isogeny_quotient(once);
        out.push_back(identity_check("two_isogeny_double_p", twice.P, t.P * Rat(4)));
        out.push_back(identity_check("two_isogeny_double_q", twice.Q, t.Q * Rat(16)));
        // 64 (z^3 + P z^2 + Q z) = (4z)^3 + 4P (4z)^2 + 16Q (4z)
        auto ctxz = xp::make_context({"alpha", "beta", "gamma", "delta", "mu", "zz"});
        std::vector<std::optional<MPoly>> lift(5);
        const MPoly P = t.P.substitute(lift, ctxz), Q = t.Q.substitute(lift, ctxz);
        const MPoly zz = xp::parse_poly("zz", ctxz);
        const MPoly lhs = (zz.pow(3) + P * zz.pow(2) + Q * zz) * Rat(64);
        const MPoly zz4 = zz * Rat(4);
        const MPoly rhs = zz4.pow(3) + P * Rat(4) * zz4.pow(2) + Q * Rat(16) * zz4;
        out.push_back(identity_check("two_isogeny_double_curve_rescale", lhs, rhs));
    }

    // --- quartic singular points: P1, P2 annihilate the polynomial and its
    // gradient for symbolic parameters
    {
        const auto& ctx = fam;
        const MPoly& F = quartic_polynomial_sym();
        const std::array<std::array<Rat, 4>, 2> pts = {{{0, 1, 0, 0}, {0, 0, 1, 0}}};
        int idx = 1;
        for (const auto& pt : pts) {
            std::vector<std::optional<MPoly>> bind(8);
            for (int i = 0; i < 4; ++i) bind[4 + i] = MPoly::constant(ctx, pt[i]);
            bool all = F.substitute(bind, ctx).is_zero();
            for (int v = 4; v < 8; ++v)
                all = all && F.derivative(v).substitute(bind, ctx).is_zero();
            xp::IdentityReport rep;
            rep.name = "quartic_singular_point_p" + std::to_string(idx++);
            rep.pass = all;
            out.push_back(rep);
        }
    }
    return out;
}

} // namespace k3atlas::k3
