// SPDX-License-Identifier: Apache-2.0
//
// Small expression language for metric coefficients: literals, the four
// chart coordinates, + - * / ^, unary minus, and a fixed set of analytic
// functions.  Evaluation is checked: domain violations throw EvalError
// instead of producing NaN.
#pragma once

#include "petrov/core.hpp"
#include "petrov/jet.hpp"

#include <array>
#include <memory>
#include <string>
#include <vector>

namespace petrov {

enum class Func { Sin, Cos, Tan, Exp, Log, Sqrt, Sinh, Cosh, Tanh };

const char* func_name(Func f);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Number, Coord, Neg, Add, Sub, Mul, Div, Pow, Call };

    Kind kind;
    double number = 0.0;
    int coord = -1;
    Func func = Func::Sin;
    ExprPtr a, b;
};

// Builders (used programmatically, e.g. by the bridge metric); they fold
// constants and drop arithmetic identities to keep generated trees small.
ExprPtr make_number(double v);
ExprPtr make_coord(int index);
ExprPtr make_neg(ExprPtr a);
ExprPtr make_add(ExprPtr a, ExprPtr b);
ExprPtr make_sub(ExprPtr a, ExprPtr b);
ExprPtr make_mul(ExprPtr a, ExprPtr b);
ExprPtr make_div(ExprPtr a, ExprPtr b);
ExprPtr make_pow(ExprPtr a, ExprPtr b);
ExprPtr make_call(Func f, ExprPtr a);

bool structurally_equal(const Expr& a, const Expr& b);

// parse / print round-trip: parse_expr(print_expr(e), coords) is
// structurally equal to e.
ExprPtr parse_expr(const std::string& text,
                   const std::array<std::string, 4>& coords);
std::string print_expr(const Expr& e);
std::string print_expr(const Expr& e, const std::array<std::string, 4>& coords);
inline std::string print_expr(const ExprPtr& e) { return print_expr(*e); }

double eval(const Expr& e, const Vec4& point);
Jet2 eval_jet(const Expr& e, const Vec4& point);

}  // namespace petrov
