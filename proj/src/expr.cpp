// SPDX-License-Identifier: Apache-2.0
#include "petrov/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace petrov {

const char* func_name(Func f) {
    switch (f) {
        case Func::Sin: return "sin";
        case Func::Cos: return "cos";
        case Func::Tan: return "tan";
        case Func::Exp: return "exp";
        case Func::Log: return "log";
        case Func::Sqrt: return "sqrt";
        case Func::Sinh: return "sinh";
        case Func::Cosh: return "cosh";
        case Func::Tanh: return "tanh";
    }
    return "?";
}

static bool lookup_func(const std::string& name, Func& out) {
    static const std::pair<const char*, Func> table[] = {
        {"sin", Func::Sin},   {"cos", Func::Cos},   {"tan", Func::Tan},
        {"exp", Func::Exp},   {"log", Func::Log},   {"sqrt", Func::Sqrt},
        {"sinh", Func::Sinh}, {"cosh", Func::Cosh}, {"tanh", Func::Tanh}};
    for (const auto& [n, f] : table) {
        if (name == n) {
            out = f;
            return true;
        }
    }
    return false;
}

// --- builders -----------------------------------------------------------

static ExprPtr node(Expr e) { return std::make_shared<Expr>(std::move(e)); }

ExprPtr make_number(double v) {
    Expr e;
    e.kind = Expr::Kind::Number;
    e.number = v;
    return node(std::move(e));
}

ExprPtr make_coord(int index) {
    Expr e;
    e.kind = Expr::Kind::Coord;
    e.coord = index;
    return node(std::move(e));
}

static bool is_number(const ExprPtr& e, double v) {
    return e->kind == Expr::Kind::Number && e->number == v;
}

ExprPtr make_neg(ExprPtr a) {
    if (a->kind == Expr::Kind::Number) return make_number(-a->number);
    if (a->kind == Expr::Kind::Neg) return a->a;
    Expr e;
    e.kind = Expr::Kind::Neg;
    e.a = std::move(a);
    return node(std::move(e));
}

ExprPtr make_add(ExprPtr a, ExprPtr b) {
    if (is_number(a, 0.0)) return b;
    if (is_number(b, 0.0)) return a;
    if (a->kind == Expr::Kind::Number && b->kind == Expr::Kind::Number)
        return make_number(a->number + b->number);
    Expr e;
    e.kind = Expr::Kind::Add;
    e.a = std::move(a);
    e.b = std::move(b);
    return node(std::move(e));
}

ExprPtr make_sub(ExprPtr a, ExprPtr b) {
    if (is_number(b, 0.0)) return a;
    if (a->kind == Expr::Kind::Number && b->kind == Expr::Kind::Number)
        return make_number(a->number - b->number);
    if (is_number(a, 0.0)) return make_neg(std::move(b));
    Expr e;
    e.kind = Expr::Kind::Sub;
    e.a = std::move(a);
    e.b = std::move(b);
    return node(std::move(e));
}

ExprPtr make_mul(ExprPtr a, ExprPtr b) {
    if (is_number(a, 0.0) || is_number(b, 0.0)) return make_number(0.0);
    if (is_number(a, 1.0)) return b;
    if (is_number(b, 1.0)) return a;
    if (a->kind == Expr::Kind::Number && b->kind == Expr::Kind::Number)
        return make_number(a->number * b->number);
    Expr e;
    e.kind = Expr::Kind::Mul;
    e.a = std::move(a);
    e.b = std::move(b);
    return node(std::move(e));
}

ExprPtr make_div(ExprPtr a, ExprPtr b) {
    if (is_number(b, 1.0)) return a;
    Expr e;
    e.kind = Expr::Kind::Div;
    e.a = std::move(a);
    e.b = std::move(b);
    return node(std::move(e));
}

ExprPtr make_pow(ExprPtr a, ExprPtr b) {
    if (is_number(b, 1.0)) return a;
    Expr e;
    e.kind = Expr::Kind::Pow;
    e.a = std::move(a);
    e.b = std::move(b);
    return node(std::move(e));
}

ExprPtr make_call(Func f, ExprPtr a) {
    Expr e;
    e.kind = Expr::Kind::Call;
    e.func = f;
    e.a = std::move(a);
    return node(std::move(e));
}

bool structurally_equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case Expr::Kind::Number: return a.number == b.number;
        case Expr::Kind::Coord: return a.coord == b.coord;
        case Expr::Kind::Neg:
        case Expr::Kind::Call:
            return (a.kind != Expr::Kind::Call || a.func == b.func) &&
                   structurally_equal(*a.a, *b.a);
        default:
            return structurally_equal(*a.a, *b.a) &&
                   structurally_equal(*a.b, *b.b);
    }
}

// --- parser --------------------------------------------------------------

namespace {

struct Token {
    enum class Type { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Type type;
    double number = 0.0;
    std::string ident;
    int column = 0;
};

class Lexer {
  public:
    explicit Lexer(const std::string& text) : text_(text) {}

    Token next() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        Token t;
        t.column = static_cast<int>(pos_) + 1;
        if (pos_ >= text_.size()) {
            t.type = Token::Type::End;
            return t;
        }
        const char c = text_[pos_];
        switch (c) {
            case '+': ++pos_; t.type = Token::Type::Plus; return t;
            case '-': ++pos_; t.type = Token::Type::Minus; return t;
            case '*': ++pos_; t.type = Token::Type::Star; return t;
            case '/': ++pos_; t.type = Token::Type::Slash; return t;
            case '^': ++pos_; t.type = Token::Type::Caret; return t;
            case '(': ++pos_; t.type = Token::Type::LParen; return t;
            case ')': ++pos_; t.type = Token::Type::RParen; return t;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const char* begin = text_.c_str() + pos_;
            char* end = nullptr;
            t.number = std::strtod(begin, &end);
            if (end == begin) throw ParseError("malformed number", 1, t.column);
            if (!std::isfinite(t.number))
                throw ParseError("number literal out of range", 1, t.column);
            pos_ += static_cast<size_t>(end - begin);
            t.type = Token::Type::Number;
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            t.type = Token::Type::Ident;
            t.ident = text_.substr(start, pos_ - start);
            return t;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", 1, t.column);
    }

  private:
    const std::string& text_;
    size_t pos_ = 0;
};

class Parser {
  public:
    Parser(const std::string& text, const std::array<std::string, 4>& coords)
        : lexer_(text), coords_(coords) {
        advance();
    }

    ExprPtr parse() {
        ExprPtr e = parse_sum();
        expect(Token::Type::End, "end of expression");
        return e;
    }

  private:
    void advance() { tok_ = lexer_.next(); }

    void expect(Token::Type t, const char* what) {
        if (tok_.type != t)
            throw ParseError(std::string("expected ") + what, 1, tok_.column);
    }

    ExprPtr parse_sum() {
        ExprPtr e = parse_term();
        while (tok_.type == Token::Type::Plus || tok_.type == Token::Type::Minus) {
            const bool plus = tok_.type == Token::Type::Plus;
            advance();
            ExprPtr rhs = parse_term();
            Expr n;
            n.kind = plus ? Expr::Kind::Add : Expr::Kind::Sub;
            n.a = std::move(e);
            n.b = std::move(rhs);
            e = node(std::move(n));
        }
        return e;
    }

    ExprPtr parse_term() {
        ExprPtr e = parse_unary();
        while (tok_.type == Token::Type::Star || tok_.type == Token::Type::Slash) {
            const bool mul = tok_.type == Token::Type::Star;
            advance();
            ExprPtr rhs = parse_unary();
            Expr n;
            n.kind = mul ? Expr::Kind::Mul : Expr::Kind::Div;
            n.a = std::move(e);
            n.b = std::move(rhs);
            e = node(std::move(n));
        }
        return e;
    }

    ExprPtr parse_unary() {
        if (tok_.type == Token::Type::Minus) {
            advance();
            // make_neg folds -<literal> into a signed literal, which keeps
            // parse(print(e)) structurally exact for negative numbers
            return make_neg(parse_unary());
        }
        return parse_power();
    }

    // '^' is right-associative and binds tighter than unary minus on the
    // left: -x^2 parses as -(x^2), 2^-3 is allowed.
    ExprPtr parse_power() {
        ExprPtr base = parse_atom();
        if (tok_.type == Token::Type::Caret) {
            advance();
            ExprPtr expo = parse_unary();
            Expr n;
            n.kind = Expr::Kind::Pow;
            n.a = std::move(base);
            n.b = std::move(expo);
            return node(std::move(n));
        }
        return base;
    }

    ExprPtr parse_atom() {
        if (tok_.type == Token::Type::Number) {
            ExprPtr e = make_number(tok_.number);
            advance();
            return e;
        }
        if (tok_.type == Token::Type::LParen) {
            advance();
            ExprPtr e = parse_sum();
            expect(Token::Type::RParen, "')'");
            advance();
            return e;
        }
        if (tok_.type == Token::Type::Ident) {
            const std::string name = tok_.ident;
            const int col = tok_.column;
            advance();
            if (tok_.type == Token::Type::LParen) {
                Func f;
                if (!lookup_func(name, f))
                    throw ParseError("unknown function '" + name + "'", 1, col);
                advance();
                ExprPtr arg = parse_sum();
                expect(Token::Type::RParen, "')'");
                advance();
                Expr n;
                n.kind = Expr::Kind::Call;
                n.func = f;
                n.a = std::move(arg);
                return node(std::move(n));
            }
            for (int i = 0; i < 4; ++i) {
                if (coords_[i] == name) return make_coord(i);
            }
            throw ParseError("unknown identifier '" + name + "'", 1, col);
        }
        throw ParseError("expected a number, coordinate, or '('", 1, tok_.column);
    }

    Lexer lexer_;
    const std::array<std::string, 4>& coords_;
    Token tok_;
};

int precedence(Expr::Kind k) {
    switch (k) {
        case Expr::Kind::Add:
        case Expr::Kind::Sub: return 1;
        case Expr::Kind::Mul:
        case Expr::Kind::Div: return 2;
        case Expr::Kind::Neg: return 3;
        case Expr::Kind::Pow: return 4;
        default: return 5;
    }
}

void print_rec(const Expr& e, std::ostream& os,
               const std::array<std::string, 4>* coords);

void print_child(const Expr& child, std::ostream& os, int parent_prec,
                 bool tighten, const std::array<std::string, 4>* coords) {
    int child_prec = precedence(child.kind);
    // negative literals print with a leading '-', so treat them like Neg
    if (child.kind == Expr::Kind::Number && child.number < 0) child_prec = 3;
    const bool parens = child_prec < parent_prec + (tighten ? 1 : 0);
    if (parens) os << '(';
    print_rec(child, os, coords);
    if (parens) os << ')';
}

void print_rec(const Expr& e, std::ostream& os,
               const std::array<std::string, 4>* coords) {
    switch (e.kind) {
        case Expr::Kind::Number: {
            char buf[32];
            snprintf(buf, sizeof buf, "%.17g", e.number);
            os << buf;
            return;
        }
        case Expr::Kind::Coord:
            os << (coords ? (*coords)[e.coord] : "c" + std::to_string(e.coord));
            return;
        case Expr::Kind::Neg:
            os << '-';
            print_child(*e.a, os, precedence(e.kind), true, coords);
            return;
        case Expr::Kind::Add:
            print_child(*e.a, os, 1, false, coords);
            os << " + ";
            print_child(*e.b, os, 1, true, coords);
            return;
        case Expr::Kind::Sub:
            print_child(*e.a, os, 1, false, coords);
            os << " - ";
            print_child(*e.b, os, 1, true, coords);
            return;
        case Expr::Kind::Mul:
            print_child(*e.a, os, 2, false, coords);
            os << "*";
            print_child(*e.b, os, 2, true, coords);
            return;
        case Expr::Kind::Div:
            print_child(*e.a, os, 2, false, coords);
            os << "/";
            print_child(*e.b, os, 2, true, coords);
            return;
        case Expr::Kind::Pow:
            // both sides parenthesized unless atomic: ^ is right-assoc and
            // the exponent may itself be a unary minus
            print_child(*e.a, os, 4, true, coords);
            os << "^";
            print_child(*e.b, os, 4, true, coords);
            return;
        case Expr::Kind::Call:
            os << func_name(e.func) << '(';
            print_rec(*e.a, os, coords);
            os << ')';
            return;
    }
}

}  // namespace

ExprPtr parse_expr(const std::string& text,
                   const std::array<std::string, 4>& coords) {
    Parser p(text, coords);
    return p.parse();
}

std::string print_expr(const Expr& e) {
    std::ostringstream os;
    print_rec(e, os, nullptr);
    return os.str();
}

std::string print_expr(const Expr& e, const std::array<std::string, 4>& coords) {
    std::ostringstream os;
    print_rec(e, os, &coords);
    return os.str();
}

// --- evaluation -----------------------------------------------------------

namespace {

double checked(double v, const char* what) {
    if (!std::isfinite(v)) throw EvalError(std::string(what) + " produced a non-finite value");
    return v;
}

double eval_rec(const Expr& e, const Vec4& p) {
    switch (e.kind) {
        case Expr::Kind::Number: return e.number;
        case Expr::Kind::Coord: return p[e.coord];
        case Expr::Kind::Neg: return -eval_rec(*e.a, p);
        case Expr::Kind::Add: return checked(eval_rec(*e.a, p) + eval_rec(*e.b, p), "+");
        case Expr::Kind::Sub: return checked(eval_rec(*e.a, p) - eval_rec(*e.b, p), "-");
        case Expr::Kind::Mul: return checked(eval_rec(*e.a, p) * eval_rec(*e.b, p), "*");
        case Expr::Kind::Div: {
            const double d = eval_rec(*e.b, p);
            if (d == 0.0) throw EvalError("division by zero");
            return checked(eval_rec(*e.a, p) / d, "/");
        }
        case Expr::Kind::Pow: {
            const double a = eval_rec(*e.a, p);
            const double b = eval_rec(*e.b, p);
            if (a == 0.0 && b < 0.0) throw EvalError("zero raised to a negative power");
            if (a < 0.0 && b != std::nearbyint(b))
                throw EvalError("non-integer power of a negative base");
            return checked(std::pow(a, b), "^");
        }
        case Expr::Kind::Call: {
            const double a = eval_rec(*e.a, p);
            switch (e.func) {
                case Func::Sin: return std::sin(a);
                case Func::Cos: return std::cos(a);
                case Func::Tan: return checked(std::tan(a), "tan");
                case Func::Exp: return checked(std::exp(a), "exp");
                case Func::Log:
                    if (a <= 0.0) throw EvalError("log of a non-positive value");
                    return std::log(a);
                case Func::Sqrt:
                    if (a < 0.0) throw EvalError("sqrt of a negative value");
                    return std::sqrt(a);
                case Func::Sinh: return checked(std::sinh(a), "sinh");
                case Func::Cosh: return checked(std::cosh(a), "cosh");
                case Func::Tanh: return std::tanh(a);
            }
            throw EvalError("unknown function");
        }
    }
    throw EvalError("corrupt expression node");
}

Jet2 eval_jet_rec(const Expr& e, const Vec4& p) {
    switch (e.kind) {
        case Expr::Kind::Number: return Jet2::constant(e.number);
        case Expr::Kind::Coord: return Jet2::variable(p[e.coord], e.coord);
        case Expr::Kind::Neg: return -eval_jet_rec(*e.a, p);
        case Expr::Kind::Add: return eval_jet_rec(*e.a, p) + eval_jet_rec(*e.b, p);
        case Expr::Kind::Sub: return eval_jet_rec(*e.a, p) - eval_jet_rec(*e.b, p);
        case Expr::Kind::Mul: return eval_jet_rec(*e.a, p) * eval_jet_rec(*e.b, p);
        case Expr::Kind::Div: return eval_jet_rec(*e.a, p) / eval_jet_rec(*e.b, p);
        case Expr::Kind::Pow: return pow_jet(eval_jet_rec(*e.a, p), eval_jet_rec(*e.b, p));
        case Expr::Kind::Call: {
            const Jet2 a = eval_jet_rec(*e.a, p);
            switch (e.func) {
                case Func::Sin: return sin(a);
                case Func::Cos: return cos(a);
                case Func::Tan: return tan(a);
                case Func::Exp: return exp(a);
                case Func::Log: return log(a);
                case Func::Sqrt: return sqrt(a);
                case Func::Sinh: return sinh(a);
                case Func::Cosh: return cosh(a);
                case Func::Tanh: return tanh(a);
            }
            throw EvalError("unknown function");
        }
    }
    throw EvalError("corrupt expression node");
}

}  // namespace

double eval(const Expr& e, const Vec4& point) { return eval_rec(e, point); }

Jet2 eval_jet(const Expr& e, const Vec4& point) { return eval_jet_rec(e, point); }

}  // namespace petrov
