// SPDX-License-Identifier: Apache-2.0
//
// Exact linear algebra on the 6-dimensional space of bivectors of a
// 4-dimensional inner-product space.  The ordered basis used everywhere
// in this project is
//
//   E1 = e1^e2, E2 = e1^e3, E3 = e1^e4, E4 = e3^e4, E5 = e4^e2, E6 = e2^e3,
//
// so that the Riemannian Hodge star swaps the first and last triples and
// the Lorentzian one (e1 timelike) is the complex structure i.
#pragma once

#include "petrov/core.hpp"

#include <utility>

namespace petrov {

// Index pairs (i, j) of the basis bivectors e_i ^ e_j, 0-based.
constexpr int kBasisPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {2, 3}, {3, 1}, {1, 2}};

struct Lambda2Metric {
    MetricKind kind = MetricKind::Riemannian;

    static Lambda2Metric riemannian() { return {MetricKind::Riemannian}; }
    static Lambda2Metric lorentzian() { return {MetricKind::Lorentzian}; }

    // (+,+,+,+,+,+) or (-,-,-,+,+,+): the first three basis bivectors
    // contain the timelike e1.
    Vec6 signature_diag() const;
};

// An orthonormal frame expressed in chart coordinates; columns of
// `vectors` are the frame vectors e_1..e_4.  For the Lorentzian kind the
// timelike vector sits at index 0.
struct Frame {
    Mat4 vectors = Mat4::Identity();
    MetricKind kind = MetricKind::Riemannian;
    int timelike_index = 0;

    Vec4 timelike() const { return vectors.col(timelike_index); }
};

// Coordinates of u ^ v on the ordered basis.
Vec6 wedge(const Vec4& u, const Vec4& v);

// Induced inner product on bivectors: sum of sigma_k a_k b_k.
double ip_lambda2(const Vec6& a, const Vec6& b, const Lambda2Metric& m);

// Hodge star matrices: [[O,I],[I,O]] (star_R^2 = id) and
// [[O,I],[-I,O]] (star_L^2 = -id).
const Mat6& hodge_matrix(MetricKind kind);
Vec6 hodge(const Vec6& xi, const Lambda2Metric& m);

// Self-dual / anti-self-dual projections, star_R xi_pm = +- xi_pm.
std::pair<Vec6, Vec6> sd_split(const Vec6& xi);

// Orthonormal bases of Lambda^+ / Lambda^- as 6x3 column blocks,
// F_k = (E_k +- E_{3+k}) / sqrt(2).
Eigen::Matrix<double, 6, 3> sd_basis(int sign);

// Complex scalar product on (Lambda^2, i = star_L):
// ggL(xi, eta) = <xi, eta>_L - i <xi, star_L eta>_L.  Complex bilinear,
// not Hermitian.
Complex ggL(const Vec6& a, const Vec6& b);

// Plucker quadric xi1 xi4 + xi2 xi5 + xi3 xi6; zero iff xi decomposable.
double pluecker(const Vec6& xi);

enum class PlaneSign { Spacelike, Timelike, Degenerate };

const char* to_string(PlaneSign s);

// Causal class of the 2-plane spanned by a decomposable bivector.  The
// degenerate (lightlike) case requires both <P,P>_L and <P, star_L P>_L
// to vanish.  Throws ContractError for non-decomposable input.
PlaneSign plane_sign(const Vec6& P, const Lambda2Metric& m,
                     double tol = defaults::rel_tol);

// --- complexification --------------------------------------------------
//
// A bivector xi = sum a_k E_k + sum b_k (star_L E_k) gets complex
// coordinates z_k = a_k + i b_k on the basis {E1, E2, E3}; star_L E_k is
// -E_{3+k}, so the second real triple carries a sign flip relative to the
// basis order.  This makes i = star_L literal.

CVec3 complex_coords(const Vec6& xi);
Vec6 real_coords(const CVec3& z);

// Residual norm of M star_L - star_L M, relative to |M|.
double star_commutation_residual(const Mat6& M);

// 3x3 complex matrix of a star_L-commuting real 6x6 operator.  Throws
// ContractError (reporting the residual) when the input does not commute.
CMat3 complexify(const Mat6& M, double tol = defaults::rel_tol);

// Inverse of complexify; exact on the commutant.
Mat6 realify(const CMat3& C);

// ggL in complex coordinates: ggL(z, w) = -sum z_k w_k.
Complex ggL_complex(const CVec3& z, const CVec3& w);

}  // namespace petrov
