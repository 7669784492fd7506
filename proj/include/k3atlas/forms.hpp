#ifndef K3ATLAS_FORMS_HPP
#define K3ATLAS_FORMS_HPP

#include <array>

#include <gmpxx.h>

#include "k3atlas/numerics.hpp"
#include "k3atlas/theta.hpp"

namespace k3atlas::forms {

/// Values of the five generators at a period point.
struct FormsVector {
    Complex E4, E6, C5, C10, C12;
    static constexpr std::array<int, 5> weights{4, 6, 5, 10, 12};
    /// Which evaluation produced the values: the polynomial expressions in
    /// the fundamental quadruple, or the direct product/Goepel formulas.
    enum class Route { ThetaPolynomial, DirectFormula };
    Route route = Route::ThetaPolynomial;
    /// |C5^2 + C10| relative to a weight-10 scale, recorded at evaluation.
    double c5_sq_rel_err = 0.0;
    theta::FundamentalThetas thetas;
};

/// Evaluates E4 = 2^4 P8, E6 = 2^6 P12, C10 = -2^2 Q20, C12 = 2^4 3^-1 Q24
/// at the fundamental quadruple, plus C5 = 2^-7 prod theta_m over the ten
/// even constants.
FormsVector evaluate_forms(const SiegelPoint& kappa, double eps);

/// Independent route: C5/C10 as products over the even constants, C12 as the
/// Goepel-complement sum. PASS iff both routes agree to rel 1e-8 and
/// C5^2 = -C10 to rel 1e-9.
struct CuspCrossCheck {
    bool pass = false;
    double rel_c10 = 0.0;
    double rel_c12 = 0.0;
    double rel_c5sq = 0.0;
    Complex c10_poly, c10_product, c12_poly, c12_gopel;
};
CuspCrossCheck cusp_cross_check(const SiegelPoint& kappa, double eps);

/// Integer symplectic 4x4 matrix (g^T J g = J for J = [[0,I],[-I,0]]).
struct Sp4Matrix {
    std::array<std::array<mpz_class, 4>, 4> m;

    static Sp4Matrix identity();
    static Sp4Matrix inversion();                    // [[0,-I],[I,0]]
    static Sp4Matrix translation(long s1, long s2, long s3); // [[I,S],[0,I]]
    static Sp4Matrix negated_identity();

    Sp4Matrix operator*(const Sp4Matrix& o) const;
    bool is_symplectic() const;
};

/// Moebius action kappa -> (A kappa + B)(C kappa + D)^{-1}, re-symmetrized.
/// Throws SingularError when det(C kappa + D) is numerically singular.
SiegelPoint sp4_act(const Sp4Matrix& g, const SiegelPoint& kappa);

/// 5x5 integer isometry of the transcendental lattice in the basis
/// {p1, p2, q1, q2, r} with Gram diag-block (two hyperbolic pairs, -2).
struct IsometryMatrix {
    std::array<std::array<mpz_class, 5>, 5> m;
    IsometryMatrix operator*(const IsometryMatrix& o) const;
    bool operator==(const IsometryMatrix& o) const { return m == o.m; }
};

const std::array<std::array<int, 5>, 5>& lattice_gram();

/// Exact Gram identity M^T G M = G.
bool preserves_gram(const IsometryMatrix& M);

/// The isometry induced on the transcendental lattice by a symplectic
/// matrix: the action of g on the five-dimensional invariant sublattice of
/// the second exterior power, expressed in {p1,p2,q1,q2,r}. This is the
/// closed form of the requirement that the period vector
/// (tau, 1, u, z^2 - tau u, z) transforms projectively with the Moebius
/// action; the kernel is +-I and images are Gram-verified exactly.
/// Throws DerivationError if the input fails the symplectic or Gram checks.
IsometryMatrix sp4_to_isometry(const Sp4Matrix& g);

/// Period vector omega(kappa) = (tau, 1, u, z^2 - tau u, z).
std::array<Complex, 5> period_vector(const SiegelPoint& kappa);

} // namespace k3atlas::forms

#endif
