#ifndef K3ATLAS_THETA_HPP
#define K3ATLAS_THETA_HPP

#include <array>
#include <vector>

#include "k3atlas/numerics.hpp"

namespace k3atlas::theta {

/// Half-integer theta characteristic, stored in doubled coordinates:
/// u2, v2 in {0,1}^2 stand for u = u2/2, v = v2/2.
struct ThetaChar {
    std::array<int, 2> u2{0, 0};
    std::array<int, 2> v2{0, 0};

    /// Parity flag: even iff u.v is an integer, i.e. u2.v2 is even.
    bool is_even() const { return ((u2[0] * v2[0] + u2[1] * v2[1]) % 2) == 0; }

    ThetaChar sum(const ThetaChar& o) const {
        return ThetaChar{{(u2[0] + o.u2[0]) % 2, (u2[1] + o.u2[1]) % 2},
                         {(v2[0] + o.v2[0]) % 2, (v2[1] + o.v2[1]) % 2}};
    }
    bool operator==(const ThetaChar& o) const { return u2 == o.u2 && v2 == o.v2; }
};

/// All sixteen characteristics; the first ten are even, in a fixed order
/// starting with the four of zero shift part.
const std::array<ThetaChar, 16>& all_characteristics();
const std::array<ThetaChar, 10>& even_characteristics();
const std::array<ThetaChar, 6>& odd_characteristics();

struct ThetaValue {
    Complex value;
    int radius; // max-norm truncation radius actually used
};

/// Truncated lattice sum
///   sum_{n in Z^2} exp(pi i (n+u)^T kappa (n+u) + 2 pi i (n+u)^T v),
/// with the radius R chosen so the eigenvalue tail bound is below eps.
/// Throws PrecisionError when R would exceed the cap (64) or when the least
/// eigenvalue of Im(kappa) is below the admission floor (0.05).
ThetaValue theta_constant_g2(const SiegelPoint& kappa, const ThetaChar& m, double eps);

/// Values of all theta constants at one point.
struct FundamentalThetas {
    /// Fundamental quadruple feeding every Kummer-side polynomial:
    /// 2^{-1/2} theta[u,0](2 kappa, 0) for u2 = (0,0),(1,1),(1,0),(0,1).
    /// This is the unique normalization under which the product and Goepel
    /// cusp-form routes reproduce their polynomial expressions exactly.
    Complex a, b, c, d;
    /// The ten even constants at kappa itself, ordered as
    /// even_characteristics().
    std::array<Complex, 10> even_table;
    int radius;
    double eps;
};

/// Which quadruple of constants feeds the Kummer-side polynomials. The
/// shipped convention is SecondOrderDoubledPeriod: theta[u,0](2 kappa, 0)
/// for u2 in {(0,0),(1,1),(1,0),(0,1)}; the alternatives remain available so
/// the convention audit can demonstrate the choice is forced by the
/// cusp-form route agreements.
enum class FundamentalConvention {
    SecondOrderDoubledPeriod, // theta[u,0](2k): shipped
    PhaseAtPeriod,            // theta[0,v](k)
    ShiftAtPeriod,            // theta[u,0](k)
    PhaseAtDoubledPeriod      // theta[0,v](2k)
};

std::array<Complex, 4> fundamental_quadruple(const SiegelPoint& kappa, double eps,
                                             FundamentalConvention convention);

/// Evaluates the ten even constants plus the fundamental quadruple. The six
/// odd constants are evaluated as a sanity gate and must come out below eps.
FundamentalThetas fundamental_thetas(const SiegelPoint& kappa, double eps);

/// Genus-one q-expansion bundle at tau (Im tau > 0):
/// e4 = 1 + 240 sum sigma_3(n) q^n, e6 = 1 - 504 sum sigma_5(n) q^n,
/// delta = (e4^3 - e6^2)/1728, j = e4^3/delta.
struct Genus1Suite {
    Complex e4, e6, delta, j;
};
Genus1Suite genus1_suite(Complex tau, double eps);

/// One-dimensional theta constant sum_n exp(pi i (n+u)^2 tau + 2 pi i (n+u) v)
/// with doubled characteristics u2, v2 in {0,1}.
Complex theta_g1(int u2, int v2, Complex tau, double eps);

/// Syzygy combinatorics over the ten even characteristics. A triple is
/// syzygous when the characteristic-wise sum of its three members is even;
/// Goepel quadruples are the 4-sets all of whose triples are syzygous.
/// Indices refer to even_characteristics().
struct SyzygyTables {
    std::vector<std::array<int, 4>> gopel;            // 15 quadruples
    std::vector<std::array<int, 6>> gopel_complements; // their 6-element complements
    std::vector<std::array<int, 3>> asyzygous;        // 60 triples
    std::vector<std::array<int, 3>> syzygous;         // 60 triples
};
const SyzygyTables& syzygy_tables();

} // namespace k3atlas::theta

#endif
