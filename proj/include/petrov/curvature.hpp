// SPDX-License-Identifier: Apache-2.0
//
// Pointwise curvature pipeline for 4-dimensional metrics of either
// signature.  Sign conventions:
//   Rm(v,w,x,y) = g(D_v D_w x - D_w D_v x - D_[v,w] x, y),
// so Rm(v,w,w,v) > 0 for orthonormal v,w on the round sphere;
//   Ric_jk = g^{il} Rm_ijkl,  scal = g^{jk} Ric_jk;
//   (h (*) k)_ijkl = h_il k_jk + h_jk k_il - h_ik k_jl - h_jl k_ik;
//   W = Rm - 1/2 Ric (*) g + (scal/12) g (*) g.
#pragma once

#include "petrov/chart.hpp"
#include "petrov/lambda2.hpp"

#include <array>

namespace petrov {

struct Curvature4 {
    enum class Tag { Riemann, Weyl, KNProduct };

    Tag tag = Tag::Riemann;
    std::array<double, 256> comps{};

    double& at(int i, int j, int k, int l) {
        return comps[static_cast<size_t>(((i * 4 + j) * 4 + k) * 4 + l)];
    }
    double at(int i, int j, int k, int l) const {
        return comps[static_cast<size_t>(((i * 4 + j) * 4 + k) * 4 + l)];
    }
    double max_abs() const;
};

// Gamma^k_ij = sym[k][i][j], symmetric in (i, j).
struct Christoffels {
    std::array<std::array<std::array<double, 4>, 4>, 4> sym{};
};

Christoffels christoffel(const Mat4& g, const std::array<Mat4, 4>& dg);

Curvature4 riemann(const MetricJets& mj);

struct RicciScalar {
    Mat4 ricci;
    double scalar;
};

RicciScalar ricci_scalar(const Curvature4& Rm, const Mat4& g);

Curvature4 kulkarni_nomizu(const Mat4& h, const Mat4& k);

Curvature4 weyl(const Curvature4& Rm, const Mat4& Ric, double scal, const Mat4& g);

// Full pipeline at a point.
Curvature4 weyl_tensor(const MetricChart& chart, const Vec4& p);
Curvature4 riemann_tensor(const MetricChart& chart, const Vec4& p);

struct FrameBundle {
    Vec4 point;
    Frame frame;  // columns are frame vectors in chart coordinates
    Mat4 g;       // metric at the point
};

// Gram-Schmidt on the coordinate basis.  For Lorentzian charts the
// timelike vector is moved to slot 0 and normalized to <e1,e1> = -1; the
// frame is oriented (e3 and e4 swapped if needed).
FrameBundle orthonormal_frame(const MetricChart& chart, const Vec4& p);

// Same, but with e1 parallel to `first` (which must be timelike for
// Lorentzian charts).
FrameBundle orthonormal_frame(const MetricChart& chart, const Vec4& p,
                              const Vec4& first);

// g -> g -+ 2 T-flat (x) T-flat with the sign chosen by the input kind, so
// the output chart always has the opposite signature.  T is given by four
// coordinate-component expressions and must have unit length (checked at
// the points where the result is evaluated, and eagerly at
// `validate_at` here).
MetricChart bridge_metric(const MetricChart& chart, const std::array<ExprPtr, 4>& T);
MetricChart bridge_metric(const MetricChart& chart, const std::array<ExprPtr, 4>& T,
                          const Vec4& validate_at, double tol = defaults::rel_tol);

// Residuals of the algebraic curvature symmetries, relative to |T|.
struct CurvatureSymmetryResiduals {
    double antisym_front = 0;  // T_ijkl + T_jikl
    double antisym_back = 0;   // T_ijkl + T_ijlk
    double pairwise = 0;       // T_ijkl - T_klij
    double bianchi = 0;        // T_ijkl + T_jkil + T_kijl
    double trace = 0;          // g^ik T_ijkl (0 for genuine Weyl)
};

CurvatureSymmetryResiduals symmetry_residuals(const Curvature4& T, const Mat4& g);

}  // namespace petrov
