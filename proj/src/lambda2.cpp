// SPDX-License-Identifier: Apache-2.0
#include "petrov/lambda2.hpp"

#include <cmath>
#include <sstream>

namespace petrov {

Vec6 Lambda2Metric::signature_diag() const {
    Vec6 s;
    if (kind == MetricKind::Riemannian) {
        s.setOnes();
    } else {
        s << -1, -1, -1, 1, 1, 1;
    }
    return s;
}

Vec6 wedge(const Vec4& u, const Vec4& v) {
    Vec6 xi;
    for (int a = 0; a < 6; ++a) {
        const int i = kBasisPairs[a][0];
        const int j = kBasisPairs[a][1];
        xi[a] = u[i] * v[j] - u[j] * v[i];
    }
    return xi;
}

double ip_lambda2(const Vec6& a, const Vec6& b, const Lambda2Metric& m) {
    return a.cwiseProduct(m.signature_diag()).dot(b);
}

const Mat6& hodge_matrix(MetricKind kind) {
    static const Mat6 star_r = [] {
        Mat6 s = Mat6::Zero();
        s.block<3, 3>(0, 3) = Mat3::Identity();
        s.block<3, 3>(3, 0) = Mat3::Identity();
        return s;
    }();
    static const Mat6 star_l = [] {
        Mat6 s = Mat6::Zero();
        s.block<3, 3>(0, 3) = Mat3::Identity();
        s.block<3, 3>(3, 0) = -Mat3::Identity();
        return s;
    }();
    return kind == MetricKind::Riemannian ? star_r : star_l;
}

Vec6 hodge(const Vec6& xi, const Lambda2Metric& m) {
    return hodge_matrix(m.kind) * xi;
}

std::pair<Vec6, Vec6> sd_split(const Vec6& xi) {
    const Vec6 star = hodge_matrix(MetricKind::Riemannian) * xi;
    return {(xi + star) / 2.0, (xi - star) / 2.0};
}

Eigen::Matrix<double, 6, 3> sd_basis(int sign) {
    Eigen::Matrix<double, 6, 3> f = Eigen::Matrix<double, 6, 3>::Zero();
    const double s = sign >= 0 ? 1.0 : -1.0;
    const double r = 1.0 / std::sqrt(2.0);
    for (int k = 0; k < 3; ++k) {
        f(k, k) = r;
        f(k + 3, k) = s * r;
    }
    return f;
}

Complex ggL(const Vec6& a, const Vec6& b) {
    const Lambda2Metric m = Lambda2Metric::lorentzian();
    return {ip_lambda2(a, b, m), -ip_lambda2(a, hodge(b, m), m)};
}

double pluecker(const Vec6& xi) {
    return xi[0] * xi[3] + xi[1] * xi[4] + xi[2] * xi[5];
}

const char* to_string(PlaneSign s) {
    switch (s) {
        case PlaneSign::Spacelike: return "spacelike";
        case PlaneSign::Timelike: return "timelike";
        case PlaneSign::Degenerate: return "degenerate";
    }
    return "?";
}

PlaneSign plane_sign(const Vec6& P, const Lambda2Metric& m, double tol) {
    const double n2 = P.squaredNorm();
    if (n2 == 0.0) throw ContractError("plane_sign: zero bivector");
    const double plk = std::abs(pluecker(P)) / n2;
    if (plk > tol) {
        throw ContractError("plane_sign: bivector is not decomposable", plk);
    }
    const Vec6 u = P / std::sqrt(n2);
    const double pp = ip_lambda2(u, u, m);
    if (m.kind == MetricKind::Lorentzian) {
        const double ps = ip_lambda2(u, hodge(u, m), m);
        if (std::abs(pp) <= tol && std::abs(ps) <= tol) return PlaneSign::Degenerate;
    }
    return pp > 0 ? PlaneSign::Spacelike : PlaneSign::Timelike;
}

CVec3 complex_coords(const Vec6& xi) {
    CVec3 z;
    for (int k = 0; k < 3; ++k) z[k] = Complex(xi[k], -xi[k + 3]);
    return z;
}

Vec6 real_coords(const CVec3& z) {
    Vec6 xi;
    for (int k = 0; k < 3; ++k) {
        xi[k] = z[k].real();
        xi[k + 3] = -z[k].imag();
    }
    return xi;
}

double star_commutation_residual(const Mat6& M) {
    const Mat6& star = hodge_matrix(MetricKind::Lorentzian);
    const double scale = M.norm();
    if (scale == 0.0) return 0.0;
    return (M * star - star * M).norm() / scale;
}

CMat3 complexify(const Mat6& M, double tol) {
    const double res = star_commutation_residual(M);
    if (res > tol) {
        std::ostringstream os;
        os << "complexify: operator does not commute with star_L "
              "(relative residual "
           << res << ")";
        throw ContractError(os.str(), res);
    }
    // M = [[P, Q], [-Q, P]] on the commutant; the complex matrix is P + iQ.
    CMat3 c;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) c(i, j) = Complex(M(i, j), M(i, j + 3));
    return c;
}

Mat6 realify(const CMat3& C) {
    Mat6 M;
    M.block<3, 3>(0, 0) = C.real();
    M.block<3, 3>(0, 3) = C.imag();
    M.block<3, 3>(3, 0) = -C.imag();
    M.block<3, 3>(3, 3) = C.real();
    return M;
}

Complex ggL_complex(const CVec3& z, const CVec3& w) {
    return -(z[0] * w[0] + z[1] * w[1] + z[2] * w[2]);
}

}  // namespace petrov
