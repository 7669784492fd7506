#ifndef K3ATLAS_KUMMER_HPP
#define K3ATLAS_KUMMER_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "k3atlas/exactpoly.hpp"
#include "k3atlas/numerics.hpp"

namespace k3atlas::kummer {

/// Contexts shared by the pipeline: {a,b,c,d}, {a,b,c,d,x,y,z},
/// {a,b,c,d,x,y,z,w}, {a,b,c,d,t}.
const xp::VarContextPtr& theta_context();
const xp::VarContextPtr& plane_context();
const xp::VarContextPtr& space_context();
const xp::VarContextPtr& chain_context();

/// The sixteen-nodal quartic with coefficients rational in the fundamental
/// theta constants, plus its node/trope configuration.
struct HudsonModel {
    xp::RationalFunction coeff_a, coeff_b, coeff_c, coeff_d;
    /// Quartic with denominators cleared by the product of the three
    /// quadratic denominators; lives in space_context().
    xp::MPoly cleared_quartic;
    std::array<std::string, 16> labels; // "0", "12", ..., "56"
    std::array<std::array<xp::MPoly, 4>, 16> nodes;  // entries in theta_context()
    std::array<std::array<xp::MPoly, 4>, 16> tropes; // plane coefficient 4-tuples
    /// incidence[t][n]: trope plane t contains node n (exact vanishing).
    std::array<std::array<bool, 16>, 16> incidence;
};
HudsonModel build_hudson();

/// Numeric Hudson coefficients at a fundamental quadruple; HumbertError when
/// a denominator falls below tolerance (the quadruple sits over H1).
std::array<Complex, 4> hudson_coefficients(const std::array<Complex, 4>& abcd);

/// The projected six-line configuration, its fifteen intersection points,
/// and the marked conic.
struct PlaneConfig {
    std::array<std::array<xp::MPoly, 4>, 3> projection; // rows of the 3x4 map
    std::array<xp::MPoly, 6> lines;                     // L1..L6 in plane_context()
    std::map<std::pair<int, int>, std::array<xp::MPoly, 3>> points; // q_ij
    xp::MPoly conic;
};
PlaneConfig build_plane_config();

/// Quintic pencil data and the branch-profile/chain constants.
struct PencilData {
    xp::MPoly qin1;       // L1 L2 L3 C
    xp::MPoly qin2;       // printed coefficient table
    xp::MPoly qin2_q45;   // qin2 - mu_shift * qin1: the member through q45
    xp::MPoly mu_shift;   // theta_context()
    // branch profile and chain constants, theta_context()
    xp::MPoly A0, A1, B0, B1, C0, C1, D, E;
    xp::MPoly M0, M1, M2, M3, M4, N1, N2, N3;
};
PencilData build_pencil();

/// Outcome of the transformation chain: the eta-form coefficients and the
/// derived constant multiplying P24 (printed as 254, derived 256).
struct ChainResult {
    xp::MPoly hatM; // in {a,b,c,d,eta}
    xp::MPoly hatN;
    long p24_constant = 0;
    std::vector<xp::IdentityReport> reports;
};
ChainResult fibration_chain(const PencilData& pd);

/// Coefficientwise match of (hatM, hatN) against the two-torsion quotient
/// curve, closing the parameter identities through the appendix relations.
std::vector<xp::IdentityReport> verify_parameter_match(const ChainResult& chain);

/// Expands the ten-factor product and reports the exact unit sigma with
/// product = sigma * Q20.
xp::IdentityReport q20_sign_check(int& sigma_out);

/// Named exact checks, grouped.
std::vector<xp::IdentityReport> hudson_exact_checks();
std::vector<xp::IdentityReport> plane_exact_checks();
std::vector<xp::IdentityReport> pencil_exact_checks();
std::vector<xp::IdentityReport> appendix_exact_checks();

/// Everything above plus the chain and the parameter match, in order.
std::vector<xp::IdentityReport> kummer_exact_checks();

} // namespace k3atlas::kummer

#endif
