#ifndef K3ATLAS_K3FAMILY_HPP
#define K3ATLAS_K3FAMILY_HPP

#include <string>
#include <utility>
#include <vector>

#include "k3atlas/exactpoly.hpp"
#include "k3atlas/numerics.hpp"

namespace k3atlas::k3 {

/// Parameters of the quartic normal form. k3 iff gamma != 0 or delta != 0;
/// otherwise the family member is a rational surface.
struct K3Params {
    Complex alpha, beta, gamma, delta;
    bool is_k3(double tol = 0.0) const {
        return std::abs(gamma) > tol || std::abs(delta) > tol;
    }
};

/// Context {alpha, beta, gamma, delta, x, y, z, w} used by the symbolic
/// family computations.
const xp::VarContextPtr& family_context();
/// Context {alpha, beta, gamma, delta, lambda} of the standard fibration.
const xp::VarContextPtr& lambda_context();
/// Context {alpha, beta, gamma, delta, mu} of the alternate fibration.
const xp::VarContextPtr& mu_context();

/// The quartic y^2 z w - 4 x^3 z + 3 a x z w^2 + b z w^3 + g x z^2 w
///   - (d z^2 w^2 + w^4)/2, exact over Q, in family_context().
const xp::MPoly& quartic_polynomial_sym();

/// Numeric value of the quartic at a projective point.
Complex quartic_value(const K3Params& p, const std::array<Complex, 4>& pt);

struct WeierstrassFibration {
    xp::MPoly f, g, disc; // disc = 4 f^3 + 27 g^2, exact
};

struct TwoTorsionFibration {
    xp::MPoly P, Q; // curve y^2 = z^3 + P(mu) z^2 + Q(mu) z
};

/// Standard fibration data f_s = lambda^4 (gamma lambda + 3 alpha),
/// g_s = -lambda^5 (delta lambda^2 - 2 beta lambda + 1).
WeierstrassFibration standard_fibration_sym();

/// Alternate fibration (f_a, g_a) plus its two-torsion presentation
/// P = 4 mu^3 - 3 alpha mu - beta, Q = (delta/2 - gamma mu)/2.
std::pair<WeierstrassFibration, TwoTorsionFibration> alternate_fibration_sym();

/// The quotient curve data of the fiberwise two-isogeny:
/// P_Y = -2 P_X, Q_Y = P_X^2 - 4 Q_X.
TwoTorsionFibration two_isogeny_quotient(const TwoTorsionFibration& f);

/// Affine coordinate map onto the quotient curve:
/// z2 = y1^2/z1^2, y2 = (Q_X - z1^2) y1 / z1^2 for Q_X evaluated at mu.
std::pair<Complex, Complex> two_isogeny_image(Complex q_at_mu, Complex z1, Complex y1);

/// The birational involution
/// [x,y,z,w] -> [xz(dw-2gx), -yz(dw-2gx), w^3, zw(dw-2gx)].
std::array<Complex, 4> vgs_involution_apply(const K3Params& p,
                                            const std::array<Complex, 4>& pt);

/// Kodaira labels and discriminant flags for both fibrations.
struct FiberReport {
    std::string standard_at_0;        // always II*
    std::string standard_at_infinity; // III* (gamma != 0) or II*
    std::string alternate_at_infinity; // I10* or I12*
    bool has_extra_fiber = false;      // the [delta, 2 gamma] fiber, gamma != 0
    std::string extra_fiber_type;      // I2 or III
    Complex i2_iii_discriminant;       // 3 a g^2 d + 2 b g^3 - d^3
    bool on_d1 = false;                // gamma = 0 component
    Complex d4_value;                  // the degree-30 discriminant polynomial
    bool on_d4 = false;
    bool on_overlap = false;           // gamma = 0 and the overlap sextic = 0
    /// Raw factorization data at the normalized parameters: the standard
    /// discriminant is lambda^10 times a quintic (coefficients lambda^5..1),
    /// the alternate is -(2 g mu - d)^2/16 times a sextic (mu^6..1).
    std::array<Complex, 6> standard_quintic_cofactor;
    std::array<Complex, 7> alternate_sextic_cofactor;
};
FiberReport fiber_report(const K3Params& p, double tol = 1e-9);

/// The weighted-degree-30 polynomial whose vanishing marks the extra-node
/// discriminant component, in context {alpha, beta, gamma, delta}.
const xp::MPoly& d4_polynomial();
/// The overlap sextic a^6 + b^4 + d^2 - 2a^3b^2 - 2a^3d - 2b^2d (gamma = 0).
const xp::MPoly& overlap_polynomial();

/// Inverse period map: [E4, E6, 2^12 3^5 C10, 2^12 3^6 C12] as a point of
/// WP(2,3,5,6); `h1` set when the gamma coordinate of the normalized point
/// falls below the weight-consistent threshold.
struct InversePeriod {
    WeightedPoint point; // weights (2,3,5,6)
    bool h1 = false;
    K3Params params() const {
        return {point.coords[0], point.coords[1], point.coords[2], point.coords[3]};
    }
};
InversePeriod inverse_period(const SiegelPoint& kappa, double eps);

/// Igusa-Clebsch quadruple, weights (2,4,6,10).
struct IgusaClebsch {
    Complex A, B, C, D;
    WeightedPoint wp() const { return WeightedPoint({A, B, C, D}, {2, 4, 6, 10}); }
};

/// [2^3 3 d, 2^2 3^2 a g^2, 2^3 3^2 (4 a d + b g) g^2, 2^2 g^6].
/// DomainError when gamma = 0 (product case; use split_j_pair).
IgusaClebsch ic_from_params(const K3Params& p);

/// [2^3 3 C12/C10, 2^2 E4, 2^5 E4 C12 / C10 + 2^3 3^-1 E6, 2^14 C10].
/// HumbertError when C10 is below the weight-consistent tolerance.
IgusaClebsch ic_from_forms(const SiegelPoint& kappa, double eps);

/// j-invariants (classical normalization, j(i) = 1728) of the two elliptic
/// factors in the gamma = 0 case. The quadratic solved carries the
/// normalized roots j/1728: sum = (a^3-b^2)/d + 1, product = a^3/d.
std::pair<Complex, Complex> split_j_pair(const K3Params& p);

/// Exact identity suite for the family block: both fibration discriminants,
/// involution and invariance witnesses, weighted covariance, two-isogeny
/// scaling, and the two-torsion/Weierstrass consistency.
std::vector<xp::IdentityReport> family_exact_checks();

} // namespace k3atlas::k3

#endif
