// SPDX-License-Identifier: Apache-2.0
//
// Coordinate charts: four named coordinates, a declared signature and
// orientation, and ten expressions for the symmetric metric coefficients.
// The chart file format is a small structured-text document:
//
//   coords = [r, x, y, z]
//   signature = "riemannian"
//   orientation = 1
//   domain = "x > 0"            # optional note
//
//   [metric]
//   g_rr = "(2*x)^3"
//   g_xx = "1"
//   g_yy = "(2*x)^(-3)"
//   g_zz = "1"
//
// Omitted off-diagonal entries default to 0; omitted diagonal entries are
// an error.
#pragma once

#include "petrov/core.hpp"
#include "petrov/expr.hpp"

#include <array>
#include <string>

namespace petrov {

struct MetricChart {
    std::array<std::string, 4> coords;
    MetricKind signature = MetricKind::Riemannian;
    int orientation = 1;
    std::array<std::array<ExprPtr, 4>, 4> components;  // symmetric, shared nodes
    std::string domain_note;

    int coord_index(const std::string& name) const;

    // g_ij at a point, with symmetry / invertibility / declared-signature
    // checks (EvalError on violation).
    Mat4 metric(const Vec4& p) const;

    std::string to_document() const;
};

struct MetricJets {
    Mat4 g;
    std::array<Mat4, 4> dg;                  // dg[k](i,j) = d_k g_ij
    std::array<std::array<Mat4, 4>, 4> ddg;  // ddg[k][l] = d_k d_l g
};

MetricChart parse_chart(const std::string& text);
MetricChart parse_chart_file(const std::string& path);

// Evaluates g and its first and second derivatives at p, exact to machine
// precision for the expression class.
MetricJets metric_jets(const MetricChart& chart, const Vec4& p);

// Builtin registry: flat, paper-example, product(c1,c2), space-form(k),
// lorentz-flat.  Parenthesized parameters are optional and default to 1.
MetricChart builtin_chart(const std::string& name);
bool is_builtin_chart(const std::string& name);

// Chart with all components multiplied by e^{2f}; the Weyl (0,4) tensor
// of the result is e^{2f} times the original.
MetricChart conformal_rescale(const MetricChart& chart, const ExprPtr& f);

}  // namespace petrov
