// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace petrov {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using Mat6 = Eigen::Matrix<double, 6, 6>;
using CVec3 = Eigen::Vector3cd;
using CMat3 = Eigen::Matrix3cd;
using Complex = std::complex<double>;

enum class MetricKind { Riemannian, Lorentzian };

inline const char* to_string(MetricKind k) {
    return k == MetricKind::Riemannian ? "riemannian" : "lorentzian";
}

// Error taxonomy mirrors the CLI exit codes: parse -> 2, evaluation
// domain -> 3, contract violation -> 4, borderline tolerance -> 5.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    int line = 0;
    int column = 0;
    ParseError(const std::string& msg, int line_, int column_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ")"),
          line(line_), column(column_) {}
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

struct EvalError : Error {
    using Error::Error;
};

struct ContractError : Error {
    double residual = 0.0;
    explicit ContractError(const std::string& msg, double residual_ = 0.0)
        : Error(msg), residual(residual_) {}
};

namespace defaults {
constexpr double rel_tol = 1e-9;
constexpr double frame_tol = 1e-10;
}  // namespace defaults

}  // namespace petrov
