#include "k3atlas/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace k3atlas {

bool is_finite(const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

Tolerance::Tolerance(double a, double r) : abs_eps(a), rel_eps(r) {
    if (!(a > 0.0) || !(r > 0.0)) throw DomainError("tolerance components must be positive");
}

bool Tolerance::close(const Complex& x, const Complex& y) const {
    const double d = std::abs(x - y);
    return d <= abs_eps + rel_eps * (std::abs(x) + std::abs(y));
}

SiegelPoint::SiegelPoint(Complex tau, Complex z, Complex u) : tau_(tau), z_(z), u_(u) {
    if (!is_finite(tau) || !is_finite(z) || !is_finite(u))
        throw DomainError("Siegel point coordinates must be finite");
    if (!(tau.imag() > 0.0))
        throw DomainError("Im(tau) must be positive");
    if (!(tau.imag() * u.imag() > z.imag() * z.imag()))
        throw DomainError("Im(tau) Im(u) must exceed Im(z)^2");
}

double SiegelPoint::im_det() const {
    return tau_.imag() * u_.imag() - z_.imag() * z_.imag();
}

double SiegelPoint::lambda_min() const {
    const double t = tau_.imag(), u = u_.imag(), z = z_.imag();
    const double mean = 0.5 * (t + u);
    const double rad = std::sqrt(0.25 * (t - u) * (t - u) + z * z);
    return mean - rad;
}

SiegelPoint validate_siegel_point(Complex tau, Complex z, Complex u) {
    return SiegelPoint(tau, z, u);
}

WeightedPoint::WeightedPoint(std::vector<Complex> c, std::vector<int> w)
    : coords(std::move(c)), weights(std::move(w)) {
    if (coords.size() != weights.size() || coords.empty())
        throw DomainError("weighted point needs matching nonempty coords/weights");
    for (int wi : weights)
        if (wi <= 0) throw DomainError("weights must be positive");
    bool any = false;
    for (const auto& z : coords) {
        if (!is_finite(z)) throw DomainError("weighted point coordinates must be finite");
        if (z != Complex(0.0, 0.0)) any = true;
    }
    if (!any) throw DomainError("weighted point must have a nonzero coordinate");
}

namespace {

std::size_t pivot_index(const WeightedPoint& p) {
    std::size_t best = 0;
    double mag = -1.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double m = std::abs(p.coords[i]);
        if (m > mag) {
            mag = m;
            best = i;
        }
    }
    return best;
}

// Pivot for normalization: the weight-adjusted magnitude |p_i|^{1/w_i} is
// invariant in shape under weighted rescaling, which makes normalization
// idempotent. Ties prefer a coordinate already equal to 1, then lowest index.
std::size_t normalize_pivot(const WeightedPoint& p) {
    std::size_t best = 0;
    double mag = -1.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double m = std::pow(std::abs(p.coords[i]), 1.0 / p.weights[i]);
        const bool tie = std::abs(m - mag) <= 1e-15 * (m + mag);
        if ((tie && p.coords[i] == Complex(1.0, 0.0) && p.coords[best] != Complex(1.0, 0.0)) ||
            (!tie && m > mag)) {
            mag = std::max(mag, m);
            best = i;
        }
        mag = std::max(mag, m);
    }
    return best;
}

Complex pow_int(Complex t, int w) {
    Complex r(1.0, 0.0);
    for (int i = 0; i < w; ++i) r *= t;
    return r;
}

} // namespace

WeightedPoint wp_scale(const WeightedPoint& p, Complex t) {
    if (t == Complex(0.0, 0.0)) throw DomainError("scaling factor must be nonzero");
    WeightedPoint q = p;
    for (std::size_t i = 0; i < p.size(); ++i)
        q.coords[i] = p.coords[i] * pow_int(t, p.weights[i]);
    return q;
}

bool wp_equal(const WeightedPoint& p, const WeightedPoint& q, const Tolerance& tol) {
    if (p.weights != q.weights) throw DomainError("weighted points must share weights");

    const std::size_t n = p.size();
    // A coordinate counts as structurally zero relative to the point's scale.
    double pscale = 0.0, qscale = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        pscale = std::max(pscale, std::abs(p.coords[i]));
        qscale = std::max(qscale, std::abs(q.coords[i]));
    }
    if (pscale == 0.0 || qscale == 0.0)
        throw DomainError("weighted point with all coordinates zero");

    const std::size_t piv = pivot_index(p);
    if (std::abs(q.coords[piv]) <= tol.abs_eps + tol.rel_eps * qscale) return false;

    // Scale-normalized ratio at the pivot; every w_piv-th root is a candidate.
    const int w = p.weights[piv];
    const Complex ratio = q.coords[piv] / p.coords[piv];
    const double rho = std::pow(std::abs(ratio), 1.0 / w);
    const double phi = std::arg(ratio);

    for (int k = 0; k < w; ++k) {
        const double ang = (phi + 2.0 * M_PI * k) / w;
        const Complex t = std::polar(rho, ang);
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            const Complex lhs = q.coords[i];
            const Complex rhs = pow_int(t, p.weights[i]) * p.coords[i];
            const double d = std::abs(lhs - rhs);
            ok = d <= tol.abs_eps * qscale + tol.rel_eps * (std::abs(lhs) + std::abs(rhs) + qscale);
        }
        if (ok) return true;
    }
    return false;
}

WeightedPoint wp_normalize(const WeightedPoint& p) {
    const std::size_t piv = normalize_pivot(p);
    const int w = p.weights[piv];
    const Complex v = p.coords[piv];
    // principal w-th root of 1/v: modulus |v|^{-1/w}, argument in (-pi/w, pi/w]
    const double rho = std::pow(std::abs(v), -1.0 / w);
    const double ang = -std::arg(v) / w;
    const Complex t = std::polar(rho, ang);
    WeightedPoint q = wp_scale(p, t);
    q.coords[piv] = Complex(1.0, 0.0); // exact by construction
    return q;
}

} // namespace k3atlas
