#include "k3atlas/forms.hpp"

#include <cmath>

#include "k3atlas/polydata.hpp"

namespace k3atlas::forms {

namespace {

Complex eval4(const xp::MPoly& p, const theta::FundamentalThetas& ft) {
    std::vector<std::optional<Complex>> b{ft.a, ft.b, ft.c, ft.d};
    return p.eval(b);
}

} // namespace

FormsVector evaluate_forms(const SiegelPoint& kappa, double eps) {
    const auto& tab = data_table();
    FormsVector out;
    out.thetas = theta::fundamental_thetas(kappa, eps);
    out.E4 = 16.0 * eval4(tab.at("P8"), out.thetas);
    out.E6 = 64.0 * eval4(tab.at("P12"), out.thetas);
    out.C10 = -4.0 * eval4(tab.at("Q20"), out.thetas);
    out.C12 = 16.0 / 3.0 * eval4(tab.at("Q24"), out.thetas);
    Complex prod(1.0, 0.0);
    for (const auto& th : out.thetas.even_table) prod *= th;
    out.C5 = std::pow(2.0, -7) * prod;
    // Weight-10 reference scale so the relative check stays meaningful on
    // the locus where C5 and C10 both vanish.
    const double floor10 = std::pow(std::abs(out.E4), 2.5) + std::pow(std::abs(out.E6), 5.0 / 3.0);
    const double scale = std::abs(out.C5 * out.C5) + std::abs(out.C10) + 1e-9 * floor10;
    out.c5_sq_rel_err =
        scale > 0 ? std::abs(out.C5 * out.C5 + out.C10) / scale : 0.0;
    if (out.c5_sq_rel_err > 1e-6)
        throw PrecisionError("C5^2 = -C10 invariant violated beyond tolerance");
    return out;
}

CuspCrossCheck cusp_cross_check(const SiegelPoint& kappa, double eps) {
    const FormsVector f = evaluate_forms(kappa, eps);
    CuspCrossCheck rep;
    Complex prod_sq(1.0, 0.0);
    for (const auto& th : f.thetas.even_table) prod_sq *= th * th;
    rep.c10_product = -std::pow(2.0, -14) * prod_sq;
    rep.c10_poly = f.C10;

    const auto& syz = theta::syzygy_tables();
    Complex sum(0.0, 0.0);
    for (const auto& comp : syz.gopel_complements) {
        Complex six(1.0, 0.0);
        for (int idx : comp) six *= f.thetas.even_table[idx];
        sum += std::pow(six, 4);
    }
    rep.c12_gopel = std::pow(2.0, -17) / 3.0 * sum;
    rep.c12_poly = f.C12;

    auto rel = [](Complex x, Complex y) {
        const double s = std::abs(x) + std::abs(y);
        return s > 0 ? std::abs(x - y) / s : 0.0;
    };
    rep.rel_c10 = rel(rep.c10_poly, rep.c10_product);
    rep.rel_c12 = rel(rep.c12_poly, rep.c12_gopel);
    rep.rel_c5sq = f.c5_sq_rel_err;
    rep.pass = rep.rel_c10 < 1e-8 && rep.rel_c12 < 1e-8 && rep.rel_c5sq < 1e-9;
    return rep;
}

Sp4Matrix Sp4Matrix::identity() {
    Sp4Matrix g;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) g.m[i][j] = (i == j) ? 1 : 0;
    return g;
}

Sp4Matrix Sp4Matrix::negated_identity() {
    Sp4Matrix g = identity();
    for (int i = 0; i < 4; ++i) g.m[i][i] = -1;
    return g;
}

Sp4Matrix Sp4Matrix::inversion() {
    Sp4Matrix g;
    for (auto& row : g.m)
        for (auto& v : row) v = 0;
    g.m[0][2] = -1;
    g.m[1][3] = -1;
    g.m[2][0] = 1;
    g.m[3][1] = 1;
    return g;
}

Sp4Matrix Sp4Matrix::translation(long s1, long s2, long s3) {
    Sp4Matrix g = identity();
    g.m[0][2] = s1;
    g.m[0][3] = s3;
    g.m[1][2] = s3;
    g.m[1][3] = s2;
    return g;
}

Sp4Matrix Sp4Matrix::operator*(const Sp4Matrix& o) const {
    Sp4Matrix r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            mpz_class s = 0;
            for (int k = 0; k < 4; ++k) s += m[i][k] * o.m[k][j];
            r.m[i][j] = s;
        }
    return r;
}

bool Sp4Matrix::is_symplectic() const {
    // J = [[0, I], [-I, 0]]
    auto J = [](int i, int j) -> int {
        if (i == 0 && j == 2) return 1;
        if (i == 1 && j == 3) return 1;
        if (i == 2 && j == 0) return -1;
        if (i == 3 && j == 1) return -1;
        return 0;
    };
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            mpz_class s = 0;
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l) s += m[k][i] * J(k, l) * m[l][j];
            if (s != J(i, j)) return false;
        }
    return true;
}

SiegelPoint sp4_act(const Sp4Matrix& g, const SiegelPoint& kappa) {
    auto at = [&](int i, int j) { return Complex(g.m[i][j].get_d(), 0.0); };
    const Complex tau = kappa.tau(), z = kappa.z(), u = kappa.u();
    // 2x2 blocks A, B, C, D of g
    const Complex n11 = at(0, 0) * tau + at(0, 1) * z + at(0, 2);
    const Complex n12 = at(0, 0) * z + at(0, 1) * u + at(0, 3);
    const Complex n21 = at(1, 0) * tau + at(1, 1) * z + at(1, 2);
    const Complex n22 = at(1, 0) * z + at(1, 1) * u + at(1, 3);
    const Complex d11 = at(2, 0) * tau + at(2, 1) * z + at(2, 2);
    const Complex d12 = at(2, 0) * z + at(2, 1) * u + at(2, 3);
    const Complex d21 = at(3, 0) * tau + at(3, 1) * z + at(3, 2);
    const Complex d22 = at(3, 0) * z + at(3, 1) * u + at(3, 3);
    const Complex det = d11 * d22 - d12 * d21;
    double scale = std::abs(d11) + std::abs(d12) + std::abs(d21) + std::abs(d22);
    if (std::abs(det) <= 1e-14 * scale * scale)
        throw SingularError("C kappa + D numerically singular");
    // (A kappa + B) (C kappa + D)^{-1}
    const Complex i11 = d22 / det, i12 = -d12 / det, i21 = -d21 / det, i22 = d11 / det;
    const Complex t11 = n11 * i11 + n12 * i21;
    const Complex t12 = n11 * i12 + n12 * i22;
    const Complex t21 = n21 * i11 + n22 * i21;
    const Complex t22 = n21 * i12 + n22 * i22;
    return SiegelPoint(t11, 0.5 * (t12 + t21), t22);
}

const std::array<std::array<int, 5>, 5>& lattice_gram() {
    static const std::array<std::array<int, 5>, 5> G = {{{0, 0, 1, 0, 0},
                                                         {0, 0, 0, 1, 0},
                                                         {1, 0, 0, 0, 0},
                                                         {0, 1, 0, 0, 0},
                                                         {0, 0, 0, 0, -2}}};
    return G;
}

bool preserves_gram(const IsometryMatrix& M) {
    const auto& G = lattice_gram();
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            mpz_class s = 0;
            for (int k = 0; k < 5; ++k)
                for (int l = 0; l < 5; ++l) s += M.m[k][i] * G[k][l] * M.m[l][j];
            if (s != G[i][j]) return false;
        }
    return true;
}

IsometryMatrix IsometryMatrix::operator*(const IsometryMatrix& o) const {
    IsometryMatrix r;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            mpz_class s = 0;
            for (int k = 0; k < 5; ++k) s += m[i][k] * o.m[k][j];
            r.m[i][j] = s;
        }
    return r;
}

namespace {

// Index pairs of the exterior-square basis f_i ^ f_j, i < j.
constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
// f12 f13 f14 f23 f24 f34 -> slots 0..5

// Action of g on f_i ^ f_j in those coordinates.
std::array<std::array<mpz_class, 6>, 6> wedge_square(const Sp4Matrix& g) {
    std::array<std::array<mpz_class, 6>, 6> W;
    for (int col = 0; col < 6; ++col) {
        const int i = kPairs[col][0], j = kPairs[col][1];
        for (int row = 0; row < 6; ++row) {
            const int k = kPairs[row][0], l = kPairs[row][1];
            // coefficient of f_k ^ f_l in (g f_i) ^ (g f_j)
            W[row][col] = g.m[k][i] * g.m[l][j] - g.m[l][i] * g.m[k][j];
        }
    }
    return W;
}

} // namespace

IsometryMatrix sp4_to_isometry(const Sp4Matrix& g) {
    if (!g.is_symplectic()) throw DerivationError("input matrix is not symplectic");
    const auto W = wedge_square(g);

    // Basis of the invariant rank-5 sublattice in f-coordinates
    // (slots: f12=0, f13=1, f14=2, f23=3, f24=4, f34=5):
    //   p1 = f14, p2 = f34, q1 = -f23, q2 = -f12, r = f24 - f13.
    const int slot_p1 = 2, slot_p2 = 5, slot_q1 = 3, slot_q2 = 0;
    std::array<std::array<mpz_class, 6>, 5> images; // images in f-coordinates
    auto col = [&](int slot, int sign) {
        std::array<mpz_class, 6> v;
        for (int r = 0; r < 6; ++r) v[r] = sign * W[r][slot];
        return v;
    };
    images[0] = col(slot_p1, 1);
    images[1] = col(slot_p2, 1);
    images[2] = col(slot_q1, -1);
    images[3] = col(slot_q2, -1);
    for (int r = 0; r < 6; ++r) images[4][r] = W[r][4] - W[r][1]; // f24 - f13

    IsometryMatrix M;
    for (int c = 0; c < 5; ++c) {
        const auto& y = images[c];
        // y must lie in the invariant sublattice: y_{13} + y_{24} = 0
        if (y[1] + y[4] != 0)
            throw DerivationError("image leaves the invariant sublattice");
        M.m[0][c] = y[2];   // p1-coordinate
        M.m[1][c] = y[5];   // p2
        M.m[2][c] = -y[3];  // q1
        M.m[3][c] = -y[0];  // q2
        M.m[4][c] = y[4];   // r (coefficient of f24 - f13)
    }
    if (!preserves_gram(M)) throw DerivationError("induced matrix fails the Gram identity");
    return M;
}

std::array<Complex, 5> period_vector(const SiegelPoint& kappa) {
    const Complex tau = kappa.tau(), z = kappa.z(), u = kappa.u();
    return {tau, Complex(1.0, 0.0), u, z * z - tau * u, z};
}

} // namespace k3atlas::forms
