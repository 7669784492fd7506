#include "k3atlas/kummer.hpp"

#include <cmath>

#include "k3atlas/polydata.hpp"

namespace k3atlas::kummer {

using xp::MPoly;
using xp::Rat;

const xp::VarContextPtr& theta_context() {
    static const auto ctx = xp::make_context({"a", "b", "c", "d"});
    return ctx;
}
const xp::VarContextPtr& plane_context() {
    static const auto ctx = xp::make_context({"a", "b", "c", "d", "x", "y", "z"});
    return ctx;
}
const xp::VarContextPtr& space_context() {
    static const auto ctx = xp::make_context({"a", "b", "c", "d", "x", "y", "z", "w"});
    return ctx;
}
const xp::VarContextPtr& chain_context() {
    static const auto ctx = xp::make_context({"a", "b", "c", "d", "t"});
    return ctx;
}

namespace {

MPoly pt(const std::string& s) { return xp::parse_poly(s, theta_context()); }
MPoly pl(const std::string& s) { return xp::parse_poly(s, plane_context()); }
MPoly sp(const std::string& s) { return xp::parse_poly(s, space_context()); }

// Lift a theta-context polynomial into a wider context sharing a,b,c,d.
MPoly lift(const MPoly& p, const xp::VarContextPtr& target) {
    return p.substitute(std::vector<std::optional<MPoly>>(p.arity()), target);
}

const MPoly& data(const std::string& name) { return data_table().at(name); }

// The sixteen node coordinate 4-tuples, by label.
const std::array<std::pair<const char*, std::array<const char*, 4>>, 16>& node_table() {
    static const std::array<std::pair<const char*, std::array<const char*, 4>>, 16> t = {{
        {"0", {"a", "b", "c", "d"}},
        {"12", {"c", "d", "a", "b"}},
        {"13", {"a", "-b", "-c", "d"}},
        {"14", {"-b", "a", "d", "-c"}},
        {"15", {"c", "d", "-a", "-b"}},
        {"16", {"-b", "-a", "d", "c"}},
        {"23", {"-c", "d", "a", "-b"}},
        {"24", {"d", "-c", "-b", "a"}},
        {"25", {"-a", "-b", "c", "d"}},
        {"26", {"d", "c", "-b", "-a"}},
        {"34", {"b", "a", "d", "c"}},
        {"35", {"-c", "d", "-a", "b"}},
        {"36", {"b", "-a", "d", "-c"}},
        {"45", {"d", "-c", "b", "-a"}},
        {"46", {"-a", "b", "-c", "d"}},
        {"56", {"d", "c", "b", "a"}},
    }};
    return t;
}

// Trope plane coefficient 4-tuples. The "13" entry carries the corrected
// final sign: the printed "+a w" variant contains no nodes at all, while
// "-a w" contains exactly the six nodes 13, 23, 0, 34, 35, 36.
const std::array<std::pair<const char*, std::array<const char*, 4>>, 16>& trope_table() {
    static const std::array<std::pair<const char*, std::array<const char*, 4>>, 16> t = {{
        {"0", {"d", "-c", "b", "-a"}},
        {"12", {"b", "-a", "d", "-c"}},
        {"13", {"d", "c", "-b", "-a"}},
        {"14", {"c", "d", "-a", "-b"}},
        {"15", {"-b", "a", "d", "-c"}},
        {"16", {"-c", "d", "a", "-b"}},
        {"23", {"-b", "-a", "d", "c"}},
        {"24", {"-a", "-b", "c", "d"}},
        {"25", {"d", "-c", "-b", "a"}},
        {"26", {"a", "-b", "-c", "d"}},
        {"34", {"-c", "d", "-a", "b"}},
        {"35", {"b", "a", "d", "c"}},
        {"36", {"c", "d", "a", "b"}},
        {"45", {"a", "b", "c", "d"}},
        {"46", {"d", "c", "b", "a"}},
        {"56", {"-a", "b", "-c", "d"}},
    }};
    return t;
}

} // namespace

HudsonModel build_hudson() {
    HudsonModel h{xp::RationalFunction(pt("b^4+c^4-a^4-d^4"), pt("a^2*d^2-b^2*c^2")),
                  xp::RationalFunction(pt("c^4+a^4-b^4-d^4"), pt("b^2*d^2-c^2*a^2")),
                  xp::RationalFunction(pt("a^4+b^4-c^4-d^4"), pt("c^2*d^2-a^2*b^2")),
                  xp::RationalFunction(
                      pt("a*b*c*d") * pt("d^2+a^2-b^2-c^2") * pt("d^2+b^2-c^2-a^2") *
                          pt("d^2+c^2-a^2-b^2") * pt("a^2+b^2+c^2+d^2"),
                      pt("a^2*d^2-b^2*c^2") * pt("b^2*d^2-c^2*a^2") * pt("c^2*d^2-a^2*b^2")),
                  MPoly(), {}, {}, {}, {}};

    const auto& sctx = space_context();
    const MPoly d1 = sp("a^2*d^2-b^2*c^2");
    const MPoly d2 = sp("b^2*d^2-c^2*a^2");
    const MPoly d3 = sp("c^2*d^2-a^2*b^2");
    h.cleared_quartic = d1 * d2 * d3 * sp("x^4+y^4+z^4+w^4") +
                        lift(h.coeff_d.num, sctx) * sp("2*x*y*z*w") +
                        lift(h.coeff_a.num, sctx) * d2 * d3 * sp("x^2*w^2+y^2*z^2") +
                        lift(h.coeff_b.num, sctx) * d1 * d3 * sp("y^2*w^2+x^2*z^2") +
                        lift(h.coeff_c.num, sctx) * d1 * d2 * sp("x^2*y^2+z^2*w^2");

    for (std::size_t i = 0; i < 16; ++i) {
        h.labels[i] = node_table()[i].first;
        for (int j = 0; j < 4; ++j) {
            h.nodes[i][j] = pt(node_table()[i].second[j]);
            h.tropes[i][j] = pt(trope_table()[i].second[j]);
        }
    }
    for (std::size_t ti = 0; ti < 16; ++ti)
        for (std::size_t ni = 0; ni < 16; ++ni) {
            MPoly dot(theta_context());
            for (int j = 0; j < 4; ++j) dot += h.tropes[ti][j] * h.nodes[ni][j];
            h.incidence[ti][ni] = dot.is_zero();
        }
    return h;
}

std::array<Complex, 4> hudson_coefficients(const std::array<Complex, 4>& abcd) {
    const Complex a = abcd[0], b = abcd[1], c = abcd[2], d = abcd[3];
    const Complex den1 = a * a * d * d - b * b * c * c;
    const Complex den2 = b * b * d * d - c * c * a * a;
    const Complex den3 = c * c * d * d - a * a * b * b;
    double scale = 0.0;
    for (const Complex& v : abcd) scale = std::max(scale, std::abs(v));
    const double floor = 1e-10 * std::pow(scale, 4);
    if (std::abs(den1) < floor || std::abs(den2) < floor || std::abs(den3) < floor)
        throw HumbertError("Hudson coefficient denominator vanishes (period on H1)");
    auto p4 = [](Complex v) { return v * v * v * v; };
    const Complex A = (p4(b) + p4(c) - p4(a) - p4(d)) / den1;
    const Complex B = (p4(c) + p4(a) - p4(b) - p4(d)) / den2;
    const Complex C = (p4(a) + p4(b) - p4(c) - p4(d)) / den3;
    const Complex D = a * b * c * d * (d * d + a * a - b * b - c * c) *
                      (d * d + b * b - c * c - a * a) * (d * d + c * c - a * a - b * b) *
                      (a * a + b * b + c * c + d * d) / (den1 * den2 * den3);
    return {A, B, C, D};
}

PlaneConfig build_plane_config() {
    PlaneConfig cfg;
    const char* proj[3][4] = {{"-b", "a", "-d", "c"}, {"c", "-d", "-a", "b"}, {"d", "c", "-b", "-a"}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j) cfg.projection[i][j] = pt(proj[i][j]);

    cfg.lines[0] = pl("2*a*c*x + 2*b*d*x + 2*a*b*y - 2*c*d*y - a^2*z + b^2*z + c^2*z - d^2*z");
    cfg.lines[1] = pl("x");
    cfg.lines[2] = pl("z");
    cfg.lines[3] = pl("2*a*d*x - 2*b*c*x + a^2*y - b^2*y + c^2*y - d^2*y + 2*a*b*z + 2*c*d*z");
    cfg.lines[4] = pl("-a^2*x - b^2*x + c^2*x + d^2*x + 2*a*d*y + 2*b*c*y - 2*a*c*z + 2*b*d*z");
    cfg.lines[5] = pl("y");

    auto q = [&](int i, int j, const char* sx, const char* sy, const char* sz) {
        cfg.points[{i, j}] = {pt(sx), pt(sy), pt(sz)};
    };
    q(1, 2, "0", "-a^2+b^2+c^2-d^2", "-2*a*b+2*c*d");
    q(1, 3, "-2*a*b+2*c*d", "2*a*c+2*b*d", "0");
    q(1, 4, "a^2+b^2-c^2-d^2", "-2*b*c-2*a*d", "2*a*c-2*b*d");
    q(1, 5, "-2*b*c+2*a*d", "a^2-b^2+c^2-d^2", "2*a*b+2*c*d");
    q(1, 6, "-a^2+b^2+c^2-d^2", "0", "-2*a*c-2*b*d");
    q(2, 3, "0", "-a^2-b^2-c^2-d^2", "0");
    q(2, 4, "0", "2*a*b+2*c*d", "-a^2+b^2-c^2+d^2");
    q(2, 5, "0", "-2*a*c+2*b*d", "-2*b*c-2*a*d");
    q(2, 6, "0", "0", "a^2+b^2+c^2+d^2");
    q(3, 4, "a^2-b^2+c^2-d^2", "2*b*c-2*a*d", "0");
    q(3, 5, "2*b*c+2*a*d", "a^2+b^2-c^2-d^2", "0");
    q(3, 6, "-a^2-b^2-c^2-d^2", "0", "0");
    q(4, 5, "-2*a*c-2*b*d", "-2*a*b+2*c*d", "a^2-b^2-c^2+d^2");
    q(4, 6, "2*a*b+2*c*d", "0", "2*b*c-2*a*d");
    q(5, 6, "2*a*c-2*b*d", "0", "-a^2-b^2+c^2+d^2");

    const auto& ctx = plane_context();
    cfg.conic = lift(data("conic_200"), ctx) * pl("x^2") + lift(data("conic_020"), ctx) * pl("y^2") +
                lift(data("conic_002"), ctx) * pl("z^2") + lift(data("conic_110"), ctx) * pl("x*y") +
                lift(data("conic_101"), ctx) * pl("x*z") + lift(data("conic_011"), ctx) * pl("y*z");
    return cfg;
}

namespace {

// Exponent triples of the 21 quintic monomials, data-table suffix order.
struct QuinticTerm {
    int i, j, k;
    const char* name;
};
constexpr QuinticTerm kQuinticTerms[21] = {
    {5, 0, 0, "k500"}, {0, 5, 0, "k050"}, {0, 0, 5, "k005"}, {4, 1, 0, "k410"},
    {4, 0, 1, "k401"}, {1, 4, 0, "k140"}, {0, 4, 1, "k041"}, {1, 0, 4, "k104"},
    {0, 1, 4, "k014"}, {3, 2, 0, "k320"}, {3, 0, 2, "k302"}, {2, 3, 0, "k230"},
    {0, 3, 2, "k032"}, {2, 0, 3, "k203"}, {0, 2, 3, "k023"}, {3, 1, 1, "k311"},
    {1, 3, 1, "k131"}, {1, 1, 3, "k113"}, {1, 2, 2, "k122"}, {2, 1, 2, "k212"},
    {2, 2, 1, "k221"}};

MPoly assemble_qin2() {
    const auto& ctx = plane_context();
    MPoly out(ctx);
    for (const auto& term : kQuinticTerms) {
        const MPoly coeff = lift(data(term.name), ctx);
        if (coeff.is_zero()) continue;
        MPoly mono = xp::MPoly::constant(ctx, 1);
        mono = mono * xp::MPoly::variable(ctx, "x", term.i) *
               xp::MPoly::variable(ctx, "y", term.j) * xp::MPoly::variable(ctx, "z", term.k);
        out += coeff * mono;
    }
    return out;
}

} // namespace

PencilData build_pencil() {
    PencilData pd;
    const PlaneConfig cfg = build_plane_config();
    pd.qin1 = cfg.lines[0] * cfg.lines[1] * cfg.lines[2] * cfg.conic;
    pd.qin2 = assemble_qin2();
    pd.mu_shift = data("mu_shift");
    pd.qin2_q45 = pd.qin2 - lift(pd.mu_shift, plane_context()) * pd.qin1;
    pd.A0 = data("A0");
    pd.A1 = data("A1");
    pd.B0 = data("B0");
    pd.B1 = data("B1");
    pd.C0 = data("C0");
    pd.C1 = data("C1");
    pd.D = data("D");
    pd.E = data("E");
    pd.M0 = data("M0");
    pd.M1 = data("M1");
    pd.M2 = data("M2");
    pd.M3 = data("M3");
    pd.M4 = data("M4");
    pd.N1 = data("N1");
    pd.N2 = data("N2");
    pd.N3 = data("N3");
    return pd;
}

ChainResult fibration_chain(const PencilData& pd) {
    ChainResult out;
    const auto& cc = chain_context();
    const MPoly t = xp::parse_poly("t", cc);
    auto up = [&](const MPoly& p) { return lift(p, cc); };

    const MPoly A = up(pd.A0) + up(pd.A1) * t;
    const MPoly B = up(pd.B0) + up(pd.B1) * t;
    const MPoly C = up(pd.C0) + up(pd.C1) * t;
    const MPoly D = up(pd.D);
    const MPoly E = up(pd.E);
    const MPoly s = up(pt("24*a^2 + 24*b^2 + 24*c^2 + 24*d^2")); // common denominator of A, B

    // cleared by s^2
    const MPoly numM = A * B * C * Rat(2) + s * D * (A + B) + s * s * E * Rat(2);
    const MPoly denM = A * A * C + s * D * A + s * s * E;
    const MPoly numN = B * B * C + s * D * B + s * s * E;

    const MPoly q = t * (up(pd.M3) - t) * (up(pd.M4) + t);
    const MPoly mt_cubic = -t.pow(3) + up(pd.M2) * t.pow(2) + up(pd.M1) * t + up(pd.M0);

    out.reports.push_back(xp::identity_check("chain_m_factored_form",
                                             numM * q, mt_cubic * denM * Rat(2)));
    const MPoly n_factored = (up(pd.N1) + t) * (up(pd.N2) + t) * (up(pd.N3) + t);
    out.reports.push_back(xp::identity_check("chain_n_factored_form",
                                             numN * q, -(n_factored * denM)));

    // cleared forms and the eps shift t = eps + M2/3
    const MPoly Mt = t.pow(3) * Rat(2) - up(pd.M2) * t.pow(2) * Rat(2) -
                     up(pd.M1) * t * Rat(2) - up(pd.M0) * Rat(2);
    const MPoly Nt = -(q * n_factored);

    auto ectx = xp::make_context({"a", "b", "c", "d", "eps"});
    const MPoly eps = xp::parse_poly("eps", ectx);
    const MPoly shift = eps + lift(pd.M2, ectx) * Rat(1, 3);
    std::vector<std::optional<MPoly>> bind(5);
    bind[4] = shift;
    const MPoly Me = Mt.substitute(bind, ectx);
    const MPoly Ne = Nt.substitute(bind, ectx);

    const MPoly P2 = lift(data("P2"), ectx);
    const MPoly P8 = lift(data("P8"), ectx);
    const MPoly P12 = lift(data("P12"), ectx);
    const MPoly P20 = lift(data("P20"), ectx);
    const MPoly P24 = lift(data("P24"), ectx);

    const MPoly expectMe = eps.pow(3) * Rat(2) - P2.pow(2) * P8 * eps * Rat(24) -
                           P2.pow(3) * P12 * Rat(32);
    out.reports.push_back(xp::identity_check("chain_eps_cubic_form", Me, expectMe));

    // sextic: coefficients of eps^6..eps^1 are pinned; the constant term
    // determines the P24 multiplier
    auto eps_coeff = [&](const MPoly& p, int k) {
        MPoly c(theta_context());
        for (const auto& [e, co] : p.terms()) {
            if (e.e[4] != k) continue;
            xp::Exp e4;
            for (int i = 0; i < 4; ++i) e4.e[i] = e.e[i];
            c.add_term(e4, co);
        }
        return c;
    };
    const MPoly expectNe_no_const = eps.pow(6) - P2.pow(2) * P8 * eps.pow(4) * Rat(24) -
                                    P2.pow(3) * P12 * eps.pow(3) * Rat(32) +
                                    P2.pow(4) * P8.pow(2) * eps.pow(2) * Rat(144) +
                                    P2.pow(5) * P20 * eps * Rat(384);
    MPoly diff = Ne - expectNe_no_const;
    // diff must be eps-free
    bool eps_free = true;
    for (const auto& [e, co] : diff.terms()) eps_free = eps_free && e.e[4] == 0;
    xp::IdentityReport sext;
    sext.name = "chain_eps_sextic_upper_coefficients";
    sext.pass = eps_free;
    if (!eps_free) sext.witness = "eps-dependent terms remain";
    out.reports.push_back(sext);

    const MPoly const_term = eps_coeff(diff, 0);
    const MPoly p24 = data("P24");
    const MPoly p2 = data("P2");
    auto quot = const_term.divide_exact(p2.pow(6) * p24);
    xp::IdentityReport probe;
    probe.name = "chain_p24_constant_derived";
    if (quot && quot->as_constant()) {
        const Rat c = *quot->as_constant();
        out.p24_constant = static_cast<long>(c.get_num().get_si());
        probe.pass = (c.get_den() == 1);
        probe.witness = "constant = " + c.get_str() + " (printed display shows 254)";
    } else {
        probe.pass = false;
        probe.witness = "constant term is not a scalar multiple of P2^6 P24";
    }
    out.reports.push_back(probe);

    // eta rescale: hatM = -4 Mtilde(P2 eta)/P2^3, hatN = 16 Ntilde(P2 eta)/P2^6
    auto hctx = xp::make_context({"a", "b", "c", "d", "eta"});
    const MPoly eta = xp::parse_poly("eta", hctx);
    const MPoly P2h = lift(data("P2"), hctx);
    auto rescale = [&](const MPoly& p, int pow_div, const Rat& mul) {
        // substitute eps -> P2 * eta, then divide by P2^pow_div
        std::vector<std::optional<MPoly>> b(5);
        b[4] = P2h * eta;
        const MPoly sub = p.substitute(b, hctx);
        auto q2 = sub.divide_exact(P2h.pow(pow_div));
        if (!q2) throw IdentityError("eta rescale: P2 power does not divide exactly");
        return *q2 * mul;
    };
    out.hatM = rescale(Me, 3, Rat(-4));
    out.hatN = rescale(Ne, 6, Rat(16));

    const MPoly P8h = lift(data("P8"), hctx);
    const MPoly P12h = lift(data("P12"), hctx);
    const MPoly P20h = lift(data("P20"), hctx);
    const MPoly P24h = lift(data("P24"), hctx);
    out.reports.push_back(xp::identity_check(
        "chain_eta_cubic_display",
        out.hatM, (eta.pow(3) * Rat(2) - P8h * eta * Rat(24) - P12h * Rat(32)) * Rat(-4)));
    out.reports.push_back(xp::identity_check(
        "chain_eta_sextic_display",
        out.hatN,
        (eta.pow(6) - P8h * eta.pow(4) * Rat(24) - P12h * eta.pow(3) * Rat(32) +
         P8h.pow(2) * eta.pow(2) * Rat(144) + P20h * eta * Rat(384) +
         P24h * Rat(out.p24_constant)) *
            Rat(16)));
    return out;
}

std::vector<xp::IdentityReport> verify_parameter_match(const ChainResult& chain) {
    std::vector<xp::IdentityReport> out;
    auto hctx = chain.hatM.context();
    const MPoly eta = xp::parse_poly("eta", hctx);
    auto up = [&](const std::string& n) { return lift(data(n), hctx); };
    const MPoly P8 = up("P8"), P12 = up("P12"), P20 = up("P20"), P24 = up("P24");
    const MPoly Q20 = up("Q20"), Q24 = up("Q24");

    // P_Y(eta) = -8 eta^3 + 6 alpha eta + 2 beta with alpha = 2^4 P8,
    // beta = 2^6 P12
    const MPoly alpha = P8 * Rat(16);
    const MPoly beta = P12 * Rat(64);
    out.push_back(xp::identity_check(
        "match_cubic_is_quotient_curve",
        chain.hatM, eta.pow(3) * Rat(-8) + alpha * eta * Rat(6) + beta * Rat(2)));

    // Q_Y(eta) = 16 eta^6 - 24 a eta^4 - 8 b eta^3 + 9 a^2 eta^2
    //            + 2(3 a b + g) eta + b^2 - d
    // solve the eta^1 and eta^0 coefficients for gamma and delta
    const MPoly gamma = (P20 - P8 * P12) * Rat(1024 * 3);
    const MPoly delta = (P12.pow(2) - P24) * Rat(4096);
    out.push_back(xp::identity_check(
        "match_sextic_is_quotient_curve",
        chain.hatN,
        eta.pow(6) * Rat(16) - alpha * eta.pow(4) * Rat(24) - beta * eta.pow(3) * Rat(8) +
            alpha.pow(2) * eta.pow(2) * Rat(9) +
            (alpha * beta * Rat(3) + gamma) * eta * Rat(2) + beta.pow(2) - delta));

    // appendix closures
    out.push_back(xp::identity_check("match_gamma_via_p20_relation",
                                     gamma, -(Q20 * Rat(2 * 2 * 2) * Rat(2048) * Rat(243))));
    out.push_back(xp::identity_check("match_delta_via_p24_relation",
                                     delta, Q24 * Rat(65536) * Rat(243)));
    out.push_back(xp::identity_check("appendix_p20_relation",
                                     P20 - P8 * P12, -(Q20 * Rat(16 * 81))));
    out.push_back(xp::identity_check("appendix_p24_relation",
                                     P12.pow(2) - P24, Q24 * Rat(16 * 243)));

    // the delta identity closes only with the derived constant
    xp::IdentityReport closure;
    closure.name = "match_delta_closes_with_derived_constant";
    closure.pass = (chain.p24_constant == 256);
    closure.witness = "derived constant " + std::to_string(chain.p24_constant);
    out.push_back(closure);
    return out;
}

xp::IdentityReport q20_sign_check(int& sigma_out) {
    const MPoly product = pt("a*d-b*c") * pt("a*d+b*c") * pt("a*c-b*d") * pt("a*c+b*d") *
                          pt("a*b-c*d") * pt("a*b+c*d") * pt("a^2+d^2-b^2-c^2") *
                          pt("a^2+c^2-b^2-d^2") * pt("a^2+b^2-c^2-d^2") *
                          pt("a^2+b^2+c^2+d^2");
    const MPoly& q20 = data("Q20");
    if ((product - q20).is_zero()) {
        sigma_out = 1;
    } else if ((product + q20).is_zero()) {
        sigma_out = -1;
    } else {
        sigma_out = 0;
    }
    auto rep = xp::identity_check("q20_tenfold_product_sign",
                                  product, sigma_out >= 0 ? q20 : -q20);
    rep.witness = sigma_out != 0 ? ("sigma = " + std::to_string(sigma_out)) : rep.witness;
    // numeric spot anchor at (1,2,3,5)
    if (rep.pass) {
        const std::vector<Rat> v{Rat(1), Rat(2), Rat(3), Rat(5)};
        rep.pass = product.eval_exact(v) == q20.eval_exact(v) * Rat(sigma_out);
    }
    return rep;
}

std::vector<xp::IdentityReport> hudson_exact_checks() {
    std::vector<xp::IdentityReport> out;
    const HudsonModel h = build_hudson();
    const auto& sctx = space_context();
    for (std::size_t i = 0; i < 16; ++i) {
        std::vector<std::optional<MPoly>> bind(8);
        for (int j = 0; j < 4; ++j) bind[4 + j] = lift(h.nodes[i][j], sctx);
        xp::IdentityReport rep;
        rep.name = "hudson_node_" + h.labels[i] + "_vanishes";
        rep.pass = h.cleared_quartic.substitute(bind, sctx).is_zero();
        out.push_back(rep);
    }
    // (16,6): all row and column sums equal six
    xp::IdentityReport inc;
    inc.name = "hudson_16_6_incidence_table";
    inc.pass = true;
    for (int i = 0; i < 16; ++i) {
        int row = 0, col = 0;
        for (int j = 0; j < 16; ++j) {
            row += h.incidence[i][j] ? 1 : 0;
            col += h.incidence[j][i] ? 1 : 0;
        }
        if (row != 6 || col != 6) {
            inc.pass = false;
            inc.witness = "row/col " + std::to_string(i) + " = " + std::to_string(row) + "/" +
                          std::to_string(col);
        }
    }
    out.push_back(inc);
    return out;
}

std::vector<xp::IdentityReport> plane_exact_checks() {
    std::vector<xp::IdentityReport> out;
    const PlaneConfig cfg = build_plane_config();
    const auto& ctx = plane_context();

    auto value_at = [&](const MPoly& p, const std::array<MPoly, 3>& q) {
        std::vector<std::optional<MPoly>> bind(7);
        bind[4] = lift(q[0], ctx);
        bind[5] = lift(q[1], ctx);
        bind[6] = lift(q[2], ctx);
        return p.substitute(bind, ctx);
    };

    // each q_ij lies on exactly the lines L_i and L_j
    xp::IdentityReport pairing;
    pairing.name = "six_line_point_incidence_pairing";
    pairing.pass = true;
    for (const auto& [ij, qpt] : cfg.points) {
        for (int n = 1; n <= 6; ++n) {
            const bool vanish = value_at(cfg.lines[n - 1], qpt).is_zero();
            const bool expected = (n == ij.first || n == ij.second);
            if (vanish != expected) {
                pairing.pass = false;
                pairing.witness = "q" + std::to_string(ij.first) + std::to_string(ij.second) +
                                  " vs L" + std::to_string(n);
            }
        }
    }
    out.push_back(pairing);

    // conic through the five marked points
    for (const auto& ij : {std::pair{1, 3}, {1, 4}, {2, 5}, {2, 6}, {5, 6}}) {
        xp::IdentityReport rep;
        rep.name = "conic_through_q" + std::to_string(ij.first) + std::to_string(ij.second);
        rep.pass = value_at(cfg.conic, cfg.points.at(ij)).is_zero();
        out.push_back(rep);
    }

    // six lines tangent to a common conic: dual 6x6 determinant vanishes
    {
        std::array<std::array<MPoly, 6>, 6> rows;
        for (int n = 0; n < 6; ++n) {
            MPoly cx(theta_context()), cy(theta_context()), cz(theta_context());
            for (const auto& [e, co] : cfg.lines[n].terms()) {
                xp::Exp e4;
                for (int i = 0; i < 4; ++i) e4.e[i] = e.e[i];
                if (e.e[4] == 1) cx.add_term(e4, co);
                if (e.e[5] == 1) cy.add_term(e4, co);
                if (e.e[6] == 1) cz.add_term(e4, co);
            }
            rows[n] = {cx * cx, cy * cy, cz * cz, cx * cy, cx * cz, cy * cz};
        }
        // Laplace over the first three columns
        auto minor3 = [&](const std::array<int, 3>& r, int c0, int c1, int c2) {
            return rows[r[0]][c0] * (rows[r[1]][c1] * rows[r[2]][c2] - rows[r[1]][c2] * rows[r[2]][c1]) -
                   rows[r[0]][c1] * (rows[r[1]][c0] * rows[r[2]][c2] - rows[r[1]][c2] * rows[r[2]][c0]) +
                   rows[r[0]][c2] * (rows[r[1]][c0] * rows[r[2]][c1] - rows[r[1]][c1] * rows[r[2]][c0]);
        };
        MPoly det(theta_context());
        const int n = 6;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) {
                    std::array<int, 3> top{i, j, k};
                    std::array<int, 3> bot{};
                    int b = 0;
                    for (int m = 0; m < n; ++m)
                        if (m != i && m != j && m != k) bot[b++] = m;
                    const int sign_exp = i + j + k; // parity of the permutation
                    const MPoly term = minor3(top, 0, 1, 2) * minor3(bot, 3, 4, 5);
                    det += (sign_exp % 2 == 1) ? term : -term;
                }
        xp::IdentityReport rep;
        rep.name = "six_lines_tangent_common_conic_determinant";
        rep.pass = det.is_zero();
        if (!rep.pass) rep.witness = "nonzero dual determinant";
        out.push_back(rep);
    }
    return out;
}

namespace {

// Base-point conditions of the quintic pencil applied to one quintic.
// kind: 0 = value only, 1 = first partials, 2 = all second partials.
bool conditions_hold(const MPoly& Q, const PlaneConfig& cfg,
                     const std::vector<std::pair<std::pair<int, int>, int>>& spec) {
    const auto& ctx = plane_context();
    auto vanish_at = [&](const MPoly& p, const std::pair<int, int>& ij) {
        const auto& q = cfg.points.at(ij);
        std::vector<std::optional<MPoly>> bind(7);
        bind[4] = lift(q[0], ctx);
        bind[5] = lift(q[1], ctx);
        bind[6] = lift(q[2], ctx);
        return p.substitute(bind, ctx).is_zero();
    };
    for (const auto& [ij, kind] : spec) {
        if (!vanish_at(Q, ij)) return false;
        if (kind >= 1)
            for (int v = 4; v < 7; ++v)
                if (!vanish_at(Q.derivative(v), ij)) return false;
        if (kind >= 2)
            for (int v1 = 4; v1 < 7; ++v1)
                for (int v2 = v1; v2 < 7; ++v2)
                    if (!vanish_at(Q.derivative(v1).derivative(v2), ij)) return false;
    }
    return true;
}

const std::vector<std::pair<std::pair<int, int>, int>>& pencil_spec() {
    static const std::vector<std::pair<std::pair<int, int>, int>> s = {
        {{1, 3}, 2}, {{1, 4}, 1}, {{2, 5}, 1}, {{2, 6}, 1},
        {{2, 4}, 0}, {{3, 5}, 0}, {{3, 6}, 0}, {{5, 6}, 0}};
    return s;
}

} // namespace

std::vector<xp::IdentityReport> pencil_exact_checks() {
    std::vector<xp::IdentityReport> out;
    const PlaneConfig cfg = build_plane_config();
    const PencilData pd = build_pencil();

    xp::IdentityReport r1;
    r1.name = "qin1_pencil_base_conditions";
    r1.pass = conditions_hold(pd.qin1, cfg, pencil_spec());
    out.push_back(r1);

    xp::IdentityReport r2;
    r2.name = "qin2_pencil_base_conditions";
    r2.pass = conditions_hold(pd.qin2, cfg, pencil_spec());
    out.push_back(r2);

    xp::IdentityReport r3;
    r3.name = "qin2_q45_member_base_conditions_with_q45";
    auto spec45 = pencil_spec();
    spec45.push_back({{4, 5}, 0});
    r3.pass = conditions_hold(pd.qin2_q45, cfg, spec45);
    out.push_back(r3);

    // the printed table does NOT pass through q45: adjudicated discrepancy;
    // the member shifted by mu * QIN1 does (previous check)
    {
        const auto& ctx = plane_context();
        const auto& q45 = cfg.points.at({4, 5});
        std::vector<std::optional<MPoly>> bind(7);
        bind[4] = lift(q45[0], ctx);
        bind[5] = lift(q45[1], ctx);
        bind[6] = lift(q45[2], ctx);
        xp::IdentityReport r4;
        r4.name = "qin2_printed_table_misses_q45 (adjudicated: shift = mu * first generator)";
        r4.pass = !pd.qin2.substitute(bind, ctx).is_zero();
        out.push_back(r4);
    }

    // QIN1 does not vanish at q45 either (the pencil is transverse there)
    {
        const auto& ctx = plane_context();
        const auto& q45 = cfg.points.at({4, 5});
        std::vector<std::optional<MPoly>> bind(7);
        bind[4] = lift(q45[0], ctx);
        bind[5] = lift(q45[1], ctx);
        bind[6] = lift(q45[2], ctx);
        xp::IdentityReport r5;
        r5.name = "qin1_transverse_at_q45";
        r5.pass = !pd.qin1.substitute(bind, ctx).is_zero();
        out.push_back(r5);
    }

    // homogeneity audit: QIN2 homogeneous of degree 5 in x,y,z with
    // degree-16 coefficients
    {
        xp::IdentityReport r;
        r.name = "qin2_bidegree_audit";
        r.pass = true;
        for (const auto& [e, co] : pd.qin2.terms()) {
            const int dxyz = e.e[4] + e.e[5] + e.e[6];
            const int dabcd = e.e[0] + e.e[1] + e.e[2] + e.e[3];
            if (dxyz != 5 || dabcd != 16) r.pass = false;
        }
        out.push_back(r);
    }

    // degree audit of every loaded chain constant
    {
        xp::IdentityReport r;
        r.name = "chain_constant_degree_audit";
        r.pass = true;
        const std::pair<const MPoly*, int> wants[] = {
            {&pd.A0, 8},  {&pd.A1, 2},  {&pd.B0, 8},  {&pd.B1, 2}, {&pd.C0, 8}, {&pd.C1, 2},
            {&pd.D, 14},  {&pd.E, 20},  {&pd.M0, 18}, {&pd.M1, 12}, {&pd.M2, 6}, {&pd.M3, 6},
            {&pd.M4, 6},  {&pd.N1, 6},  {&pd.N2, 6},  {&pd.N3, 6}, {&pd.mu_shift, 6}};
        for (const auto& [p, d] : wants) {
            int dd = -1;
            if (!p->is_homogeneous(&dd) || dd != d) {
                r.pass = false;
                r.witness = "degree " + std::to_string(dd) + " expected " + std::to_string(d);
            }
        }
        out.push_back(r);
    }
    return out;
}

std::vector<xp::IdentityReport> appendix_exact_checks() {
    std::vector<xp::IdentityReport> out;
    const MPoly& p2 = data("P2");
    const MPoly& p8 = data("P8");
    const MPoly& p12 = data("P12");
    const MPoly& p20 = data("P20");
    const MPoly& p24 = data("P24");
    const MPoly& q20 = data("Q20");
    const MPoly& q24 = data("Q24");

    out.push_back(xp::identity_check("appendix_eqforp20", p20 - p8 * p12, -(q20 * Rat(16 * 81))));
    out.push_back(xp::identity_check("appendix_eqforp24", p12.pow(2) - p24, q24 * Rat(16 * 243)));

    // P24 as the printed product of six quartic factors
    const MPoly f1 = pt("a^4 - 12*a*b*c*d + b^4 + c^4 + d^4");
    const MPoly f2 = pt("a^4 + 12*a*b*c*d + b^4 + c^4 + d^4");
    const MPoly f3 =
        pt("a^4 - 6*a^2*b^2 - 6*a^2*c^2 - 6*a^2*d^2 + b^4 - 6*b^2*c^2 - 6*b^2*d^2 + c^4 - 6*c^2*d^2 + d^4");
    const MPoly f4 =
        pt("a^4 - 6*a^2*b^2 + 6*a^2*c^2 + 6*a^2*d^2 + b^4 + 6*b^2*c^2 + 6*b^2*d^2 + c^4 - 6*c^2*d^2 + d^4");
    const MPoly f5 =
        pt("a^4 + 6*a^2*b^2 - 6*a^2*c^2 + 6*a^2*d^2 + b^4 + 6*b^2*c^2 - 6*b^2*d^2 + c^4 + 6*c^2*d^2 + d^4");
    const MPoly f6 =
        pt("a^4 + 6*a^2*b^2 + 6*a^2*c^2 - 6*a^2*d^2 + b^4 - 6*b^2*c^2 + 6*b^2*d^2 + c^4 + 6*c^2*d^2 + d^4");
    out.push_back(
        xp::identity_check("appendix_p24_sixfold_product", p24, f1 * f2 * f3 * f4 * f5 * f6));

    // degree/homogeneity audit
    xp::IdentityReport h;
    h.name = "appendix_homogeneity_audit";
    h.pass = true;
    const std::pair<const MPoly*, int> degs[] = {{&p2, 2},  {&p8, 8},   {&p12, 12}, {&p20, 20},
                                                 {&p24, 24}, {&q20, 20}, {&q24, 24}};
    for (const auto& [p, d] : degs) {
        int dd = -1;
        if (!p->is_homogeneous(&dd) || dd != d) h.pass = false;
    }
    out.push_back(h);

    int sigma = 0;
    out.push_back(q20_sign_check(sigma));
    return out;
}

std::vector<xp::IdentityReport> kummer_exact_checks() {
    std::vector<xp::IdentityReport> out;
    auto add = [&](std::vector<xp::IdentityReport> v) {
        for (auto& r : v) out.push_back(std::move(r));
    };
    add(appendix_exact_checks());
    add(hudson_exact_checks());
    add(plane_exact_checks());
    add(pencil_exact_checks());
    const PencilData pd = build_pencil();
    ChainResult chain = fibration_chain(pd);
    add(std::move(chain.reports));
    add(verify_parameter_match(chain));
    return out;
}

} // namespace k3atlas::kummer
