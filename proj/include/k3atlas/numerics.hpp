#ifndef K3ATLAS_NUMERICS_HPP
#define K3ATLAS_NUMERICS_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "k3atlas/errors.hpp"

namespace k3atlas {

using Complex = std::complex<double>;

bool is_finite(const Complex& z);

/// Absolute + relative tolerance pair used by all approximate comparisons.
struct Tolerance {
    double abs_eps = 1e-12;
    double rel_eps = 1e-9;

    Tolerance() = default;
    Tolerance(double a, double r);

    bool close(const Complex& x, const Complex& y) const;
};

/// A point kappa = [[tau, z], [z, u]] of the genus-two upper half-space.
///
/// Invariants (strict): Im(tau) > 0 and Im(tau) Im(u) > Im(z)^2, i.e. the
/// imaginary part is positive definite.
class SiegelPoint {
public:
    SiegelPoint(Complex tau, Complex z, Complex u);

    Complex tau() const { return tau_; }
    Complex z() const { return z_; }
    Complex u() const { return u_; }

    /// det Im(kappa) - Im(z)^2 margin is already folded in: this is
    /// Im(tau) Im(u) - Im(z)^2, the determinant of the imaginary part.
    double im_det() const;

    /// Least eigenvalue of Im(kappa); controls theta-series tail bounds.
    double lambda_min() const;

    /// kappa as a dense 2x2 matrix {{tau, z}, {z, u}}.
    std::array<Complex, 4> matrix() const { return {tau_, z_, z_, u_}; }

private:
    Complex tau_, z_, u_;
};

/// Validates the two strict inequalities and returns the point.
/// Throws DomainError if Im(tau) <= 0 or Im(tau) Im(u) <= Im(z)^2.
SiegelPoint validate_siegel_point(Complex tau, Complex z, Complex u);

/// Coordinates with positive integer weights; equality up to the weighted
/// rescaling x_i -> t^{w_i} x_i. At least one coordinate must be nonzero.
struct WeightedPoint {
    std::vector<Complex> coords;
    std::vector<int> weights;

    WeightedPoint() = default;
    WeightedPoint(std::vector<Complex> c, std::vector<int> w);

    std::size_t size() const { return coords.size(); }
};

/// True iff q_i = t^{w_i} p_i for a single t != 0, within tol. The candidate
/// scalings are the w-th roots of q_pivot / p_pivot at the pivot of largest
/// |p_i|; every root branch is tried against all coordinates.
bool wp_equal(const WeightedPoint& p, const WeightedPoint& q, const Tolerance& tol);

/// Rescales so that the pivot coordinate becomes exactly 1, using the
/// principal w-th root branch (argument in (-pi/w, pi/w]). The pivot
/// maximizes the weight-adjusted magnitude |p_i|^{1/w_i}, which is the
/// scaling-invariant choice; afterwards every coordinate has modulus <= 1,
/// so normalization is idempotent and deterministic.
WeightedPoint wp_normalize(const WeightedPoint& p);

/// Applies the weighted scaling p_i -> t^{w_i} p_i.
WeightedPoint wp_scale(const WeightedPoint& p, Complex t);

} // namespace k3atlas

#endif
