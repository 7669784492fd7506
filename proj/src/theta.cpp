#include "k3atlas/theta.hpp"

#include <algorithm>
#include <cmath>

namespace k3atlas::theta {

namespace {

constexpr int kRadiusCap = 64;
constexpr double kLambdaFloor = 0.05;

std::array<ThetaChar, 16> build_all() {
    // zero-shift block first, in the order (0,0), (1,1), (1,0), (0,1).
    std::array<ThetaChar, 16> out{};
    std::size_t k = 0;
    const std::array<std::array<int, 2>, 4> v_head = {{{0, 0}, {1, 1}, {1, 0}, {0, 1}}};
    for (const auto& v : v_head) out[k++] = ThetaChar{{0, 0}, v};
    for (int u1 = 0; u1 < 2; ++u1)
        for (int u2 = 0; u2 < 2; ++u2) {
            if (u1 == 0 && u2 == 0) continue;
            for (int v1 = 0; v1 < 2; ++v1)
                for (int v2 = 0; v2 < 2; ++v2) out[k++] = ThetaChar{{u1, u2}, {v1, v2}};
        }
    // stable partition: even before odd, preserving construction order
    std::stable_sort(out.begin(), out.end(), [](const ThetaChar& a, const ThetaChar& b) {
        return a.is_even() && !b.is_even();
    });
    return out;
}

} // namespace

const std::array<ThetaChar, 16>& all_characteristics() {
    static const std::array<ThetaChar, 16> table = build_all();
    return table;
}

const std::array<ThetaChar, 10>& even_characteristics() {
    static const std::array<ThetaChar, 10> table = [] {
        std::array<ThetaChar, 10> t{};
        std::size_t k = 0;
        for (const auto& m : all_characteristics())
            if (m.is_even()) t[k++] = m;
        return t;
    }();
    return table;
}

const std::array<ThetaChar, 6>& odd_characteristics() {
    static const std::array<ThetaChar, 6> table = [] {
        std::array<ThetaChar, 6> t{};
        std::size_t k = 0;
        for (const auto& m : all_characteristics())
            if (!m.is_even()) t[k++] = m;
        return t;
    }();
    return table;
}

namespace {

// Upper bound for sum over max-norm > R of exp(-pi lambda |n+u|^2); the
// shell of max-norm k has 8k points and |n+u|^2 >= (k-1/2)^2.
double tail_bound(double lambda, int R) {
    double sum = 0.0;
    for (int j = R + 1; j <= R + 400; ++j) {
        const double t = 8.0 * j * std::exp(-M_PI * lambda * (j - 0.5) * (j - 0.5));
        sum += t;
        if (t < 1e-300) break;
    }
    return sum;
}

int choose_radius(double lambda, double eps) {
    if (!(eps > 0.0)) throw DomainError("eps must be positive");
    if (lambda < kLambdaFloor)
        throw PrecisionError("Im(kappa) eigenvalue below admission floor 0.05");
    for (int R = 1; R <= kRadiusCap; ++R)
        if (tail_bound(lambda, R) < eps) return R;
    throw PrecisionError("required theta truncation radius exceeds cap 64");
}

} // namespace

ThetaValue theta_constant_g2(const SiegelPoint& kappa, const ThetaChar& m, double eps) {
    const int R = choose_radius(kappa.lambda_min(), eps);
    const double u1 = 0.5 * m.u2[0], u2 = 0.5 * m.u2[1];
    const double v1 = 0.5 * m.v2[0], v2 = 0.5 * m.v2[1];
    const Complex tau = kappa.tau(), z = kappa.z(), uu = kappa.u();
    const Complex I(0.0, 1.0);

    Complex acc(0.0, 0.0);
    for (int n1 = -R; n1 <= R; ++n1) {
        const double m1 = n1 + u1;
        for (int n2 = -R; n2 <= R; ++n2) {
            const double m2 = n2 + u2;
            const Complex quad = tau * (m1 * m1) + 2.0 * z * (m1 * m2) + uu * (m2 * m2);
            const double lin = m1 * v1 + m2 * v2;
            acc += std::exp(I * M_PI * (quad + 2.0 * lin));
        }
    }
    return ThetaValue{acc, R};
}

std::array<Complex, 4> fundamental_quadruple(const SiegelPoint& kappa, double eps,
                                             FundamentalConvention convention) {
    const bool doubled = convention == FundamentalConvention::SecondOrderDoubledPeriod ||
                         convention == FundamentalConvention::PhaseAtDoubledPeriod;
    const bool shift = convention == FundamentalConvention::SecondOrderDoubledPeriod ||
                       convention == FundamentalConvention::ShiftAtPeriod;
    const SiegelPoint at = doubled
        ? SiegelPoint(2.0 * kappa.tau(), 2.0 * kappa.z(), 2.0 * kappa.u())
        : kappa;
    const std::array<std::array<int, 2>, 4> pattern = {{{0, 0}, {1, 1}, {1, 0}, {0, 1}}};
    std::array<Complex, 4> out{};
    for (std::size_t i = 0; i < 4; ++i) {
        ThetaChar m;
        if (shift)
            m = ThetaChar{pattern[i], {0, 0}};
        else
            m = ThetaChar{{0, 0}, pattern[i]};
        out[i] = theta_constant_g2(at, m, eps).value;
    }
    return out;
}

FundamentalThetas fundamentals_impl(const SiegelPoint& kappa, double eps) {
    FundamentalThetas out{};
    out.eps = eps;
    out.radius = 0;
    for (std::size_t i = 0; i < 10; ++i) {
        const ThetaValue tv = theta_constant_g2(kappa, even_characteristics()[i], eps);
        out.even_table[i] = tv.value;
        out.radius = std::max(out.radius, tv.radius);
    }
    for (const auto& m : odd_characteristics()) {
        const ThetaValue tv = theta_constant_g2(kappa, m, eps);
        if (std::abs(tv.value) >= eps)
            throw PrecisionError("odd theta constant failed to vanish within eps");
    }
    const auto q = fundamental_quadruple(kappa, eps,
                                         FundamentalConvention::SecondOrderDoubledPeriod);
    // The 2^{-1/2} scale is the unique normalization under which the
    // cusp-form product/Goepel identities hold with their printed constants.
    const double s = 1.0 / std::sqrt(2.0);
    out.a = s * q[0];
    out.b = s * q[1];
    out.c = s * q[2];
    out.d = s * q[3];
    return out;
}

FundamentalThetas fundamental_thetas(const SiegelPoint& kappa, double eps) {
    return fundamentals_impl(kappa, eps);
}

Complex theta_g1(int u2, int v2, Complex tau, double eps) {
    if (!(tau.imag() > 0.0)) throw DomainError("Im(tau) must be positive");
    if (tau.imag() < kLambdaFloor)
        throw PrecisionError("Im(tau) below admission floor 0.05");
    int R = 1;
    for (; R <= kRadiusCap; ++R) {
        double sum = 0.0;
        for (int j = R + 1; j <= R + 400; ++j) {
            const double t = 2.0 * std::exp(-M_PI * tau.imag() * (j - 0.5) * (j - 0.5));
            sum += t;
            if (t < 1e-300) break;
        }
        if (sum < eps) break;
    }
    if (R > kRadiusCap) throw PrecisionError("genus-1 theta radius exceeds cap");
    const Complex I(0.0, 1.0);
    const double u = 0.5 * u2, v = 0.5 * v2;
    Complex acc(0.0, 0.0);
    for (int n = -R; n <= R; ++n) {
        const double m = n + u;
        acc += std::exp(I * M_PI * (tau * (m * m) + 2.0 * m * v));
    }
    return acc;
}

Genus1Suite genus1_suite(Complex tau, double eps) {
    if (!(tau.imag() > 0.0)) throw DomainError("Im(tau) must be positive");
    const Complex I(0.0, 1.0);
    const Complex q = std::exp(2.0 * M_PI * I * tau);
    const double qa = std::abs(q);
    if (qa >= 0.9) throw PrecisionError("Im(tau) too small for the q-expansion term cap");

    auto sigma = [](long n, int k) {
        long long s = 0;
        for (long d = 1; d * d <= n; ++d) {
            if (n % d) continue;
            long long dk = 1, ek = 1;
            const long e = n / d;
            for (int i = 0; i < k; ++i) dk *= d;
            for (int i = 0; i < k; ++i) ek *= e;
            s += dk;
            if (e != d) s += ek;
        }
        return s;
    };

    Complex e4(1.0, 0.0), e6(1.0, 0.0);
    Complex qn = q;
    constexpr long kTermCap = 4000;
    long n = 1;
    for (; n <= kTermCap; ++n) {
        const double s5 = std::pow(static_cast<double>(n), 5.0) * static_cast<double>(n) * 2.0;
        const double tail = 504.0 * s5 * std::abs(qn) / (1.0 - qa);
        e4 += 240.0 * static_cast<double>(sigma(n, 3)) * qn;
        e6 -= 504.0 * static_cast<double>(sigma(n, 5)) * qn;
        if (tail < eps) break;
        qn *= q;
    }
    if (n > kTermCap) throw PrecisionError("q-expansion term cap reached");

    Genus1Suite out;
    out.e4 = e4;
    out.e6 = e6;
    out.delta = (e4 * e4 * e4 - e6 * e6) / 1728.0;
    if (out.delta == Complex(0.0, 0.0)) throw PrecisionError("vanishing discriminant");
    out.j = e4 * e4 * e4 / out.delta;
    return out;
}

const SyzygyTables& syzygy_tables() {
    static const SyzygyTables tables = [] {
        SyzygyTables t;
        const auto& evens = even_characteristics();
        auto syzygous_triple = [&](int i, int j, int k) {
            return evens[i].sum(evens[j]).sum(evens[k]).is_even();
        };
        for (int i = 0; i < 10; ++i)
            for (int j = i + 1; j < 10; ++j)
                for (int k = j + 1; k < 10; ++k) {
                    if (syzygous_triple(i, j, k))
                        t.syzygous.push_back({i, j, k});
                    else
                        t.asyzygous.push_back({i, j, k});
                }
        for (int i = 0; i < 10; ++i)
            for (int j = i + 1; j < 10; ++j)
                for (int k = j + 1; k < 10; ++k)
                    for (int l = k + 1; l < 10; ++l) {
                        const bool all_syz = syzygous_triple(i, j, k) && syzygous_triple(i, j, l) &&
                                             syzygous_triple(i, k, l) && syzygous_triple(j, k, l);
                        if (!all_syz) continue;
                        t.gopel.push_back({i, j, k, l});
                        std::array<int, 6> comp{};
                        std::size_t c = 0;
                        for (int m = 0; m < 10; ++m)
                            if (m != i && m != j && m != k && m != l) comp[c++] = m;
                        t.gopel_complements.push_back(comp);
                    }
        return t;
    }();
    return tables;
}

} // namespace k3atlas::theta
