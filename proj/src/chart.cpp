// SPDX-License-Identifier: Apache-2.0
#include "petrov/chart.hpp"

#include <Eigen/Eigenvalues>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace petrov {

int MetricChart::coord_index(const std::string& name) const {
    for (int i = 0; i < 4; ++i)
        if (coords[i] == name) return i;
    return -1;
}

Mat4 MetricChart::metric(const Vec4& p) const {
    Mat4 g;
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            const double v = eval(*components[i][j], p);
            g(i, j) = v;
            g(j, i) = v;
        }
    const double det = g.determinant();
    if (std::abs(det) < 1e-12)
        throw EvalError("metric is singular at the evaluation point");
    Eigen::SelfAdjointEigenSolver<Mat4> es(g, Eigen::EigenvaluesOnly);
    int negatives = 0;
    for (int i = 0; i < 4; ++i)
        if (es.eigenvalues()[i] < 0) ++negatives;
    const int expected = signature == MetricKind::Riemannian ? 0 : 1;
    if (negatives != expected) {
        std::ostringstream os;
        os << "metric does not have the declared " << to_string(signature)
           << " signature at the evaluation point (" << negatives
           << " negative eigenvalues)";
        throw EvalError(os.str());
    }
    return g;
}

std::string MetricChart::to_document() const {
    std::ostringstream os;
    os << "coords = [" << coords[0] << ", " << coords[1] << ", " << coords[2]
       << ", " << coords[3] << "]\n";
    os << "signature = \"" << to_string(signature) << "\"\n";
    os << "orientation = " << orientation << "\n";
    if (!domain_note.empty()) os << "domain = \"" << domain_note << "\"\n";
    os << "\n[metric]\n";
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            const Expr& e = *components[i][j];
            if (i != j && e.kind == Expr::Kind::Number && e.number == 0.0) continue;
            os << "g_" << coords[i] << coords[j] << " = \""
               << print_expr(e, coords) << "\"\n";
        }
    return os.str();
}

// --- chart document parser -------------------------------------------------

namespace {

struct Line {
    std::string key;
    std::string value;
    int number = 0;
};

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Strips a trailing comment, honoring quoted strings.
std::string strip_comment(const std::string& s) {
    bool quoted = false;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '"') quoted = !quoted;
        if (s[i] == '#' && !quoted) return s.substr(0, i);
    }
    return s;
}

std::string unquote(const std::string& v, int line) {
    if (v.size() < 2 || v.front() != '"' || v.back() != '"')
        throw ParseError("expected a quoted string", line, 1);
    return v.substr(1, v.size() - 2);
}

bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

}  // namespace

MetricChart parse_chart(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    bool in_metric = false;

    std::vector<std::string> coord_list;
    bool have_coords = false, have_signature = false, have_orientation = false;
    MetricChart chart;
    std::array<std::array<std::string, 4>, 4> component_text;
    std::array<std::array<int, 4>, 4> component_line{};
    std::array<std::array<bool, 4>, 4> component_set{};

    std::vector<Line> metric_lines;

    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(strip_comment(raw));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line == "[metric]") {
                in_metric = true;
                continue;
            }
            throw ParseError("unknown section " + line, line_no, 1);
        }
        const size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected 'key = value'", line_no, 1);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ParseError("expected 'key = value'", line_no, 1);

        if (in_metric) {
            metric_lines.push_back({key, value, line_no});
            continue;
        }

        if (key == "coords") {
            if (value.front() != '[' || value.back() != ']')
                throw ParseError("coords must be a [list]", line_no, 1);
            std::string inner = value.substr(1, value.size() - 2);
            std::istringstream cs(inner);
            std::string item;
            while (std::getline(cs, item, ',')) {
                item = trim(item);
                if (!valid_identifier(item))
                    throw ParseError("bad coordinate name '" + item + "'", line_no, 1);
                coord_list.push_back(item);
            }
            if (coord_list.size() != 4)
                throw ParseError("expected exactly 4 coordinates, got " +
                                     std::to_string(coord_list.size()),
                                 line_no, 1);
            for (size_t i = 0; i < 4; ++i)
                for (size_t j = i + 1; j < 4; ++j)
                    if (coord_list[i] == coord_list[j])
                        throw ParseError("duplicate coordinate name '" + coord_list[i] + "'",
                                         line_no, 1);
            for (int i = 0; i < 4; ++i) chart.coords[i] = coord_list[i];
            have_coords = true;
        } else if (key == "signature") {
            const std::string s = unquote(value, line_no);
            if (s == "riemannian")
                chart.signature = MetricKind::Riemannian;
            else if (s == "lorentzian")
                chart.signature = MetricKind::Lorentzian;
            else
                throw ParseError("signature must be \"riemannian\" or \"lorentzian\"", line_no, 1);
            have_signature = true;
        } else if (key == "orientation") {
            if (value == "1")
                chart.orientation = 1;
            else if (value == "-1")
                chart.orientation = -1;
            else
                throw ParseError("orientation must be 1 or -1", line_no, 1);
            have_orientation = true;
        } else if (key == "domain") {
            chart.domain_note = unquote(value, line_no);
        } else {
            throw ParseError("unknown key '" + key + "'", line_no, 1);
        }
    }

    if (!have_coords) throw ParseError("missing 'coords'");
    if (!have_signature) throw ParseError("missing 'signature'");
    if (!have_orientation) throw ParseError("missing 'orientation'");

    for (const Line& ml : metric_lines) {
        if (ml.key.rfind("g_", 0) != 0)
            throw ParseError("metric keys must look like g_<c1><c2>", ml.number, 1);
        const std::string pair = ml.key.substr(2);
        int ci = -1, cj = -1, matches = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (pair == chart.coords[i] + chart.coords[j]) {
                    ci = i;
                    cj = j;
                    ++matches;
                }
        if (matches == 0)
            throw ParseError("metric key '" + ml.key + "' does not name two chart coordinates",
                             ml.number, 1);
        if (matches > 1)
            throw ParseError("metric key '" + ml.key + "' is ambiguous", ml.number, 1);
        if (component_set[ci][cj] || component_set[cj][ci])
            throw ParseError("duplicate metric entry '" + ml.key + "'", ml.number, 1);
        component_set[ci][cj] = component_set[cj][ci] = true;
        component_text[ci][cj] = unquote(ml.value, ml.number);
        component_line[ci][cj] = ml.number;
    }

    for (int i = 0; i < 4; ++i) {
        if (!component_set[i][i])
            throw ParseError("missing diagonal metric entry g_" + chart.coords[i] +
                             chart.coords[i]);
    }

    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            ExprPtr e;
            if (!component_set[i][j] && !component_set[j][i]) {
                e = make_number(0.0);
            } else {
                const bool upper = component_line[i][j] > 0;
                const std::string& text = upper ? component_text[i][j] : component_text[j][i];
                const int at_line = upper ? component_line[i][j] : component_line[j][i];
                try {
                    e = parse_expr(text, chart.coords);
                } catch (const ParseError& pe) {
                    throw ParseError(std::string("in metric entry: ") + pe.what(), at_line,
                                     pe.column);
                }
            }
            chart.components[i][j] = e;
            chart.components[j][i] = e;
        }

    return chart;
}

MetricChart parse_chart_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open chart file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_chart(ss.str());
}

MetricJets metric_jets(const MetricChart& chart, const Vec4& p) {
    MetricJets out;
    for (auto& m : out.dg) m.setZero();
    for (auto& row : out.ddg)
        for (auto& m : row) m.setZero();
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            const Jet2 jet = eval_jet(*chart.components[i][j], p);
            out.g(i, j) = out.g(j, i) = jet.val;
            for (int k = 0; k < 4; ++k) {
                out.dg[k](i, j) = out.dg[k](j, i) = jet.grad[k];
                for (int l = 0; l < 4; ++l)
                    out.ddg[k][l](i, j) = out.ddg[k][l](j, i) = jet.hess(k, l);
            }
        }
    // reuse the validation in metric()
    (void)chart.metric(p);
    return out;
}

// --- builtins ---------------------------------------------------------------

namespace {

std::string fmt(double v) {
    char buf[32];
    snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Constant-curvature surface factor in stereographic-style coordinates:
// (dx^2 + dy^2) / (1 + (c/4)(x^2 + y^2))^2 has Gaussian curvature c.
std::string surface_factor(double c, const std::string& x, const std::string& y) {
    return "(1 + " + fmt(c / 4.0) + "*(" + x + "^2 + " + y + "^2))^(-2)";
}

// Accepts "name" or "name(p1,p2,...)".
bool split_builtin(const std::string& s, std::string& name, std::vector<double>& params) {
    const size_t lp = s.find('(');
    if (lp == std::string::npos) {
        name = s;
        return true;
    }
    if (s.back() != ')') return false;
    name = s.substr(0, lp);
    std::string inner = s.substr(lp + 1, s.size() - lp - 2);
    std::istringstream ps(inner);
    std::string item;
    while (std::getline(ps, item, ',')) {
        try {
            params.push_back(std::stod(trim(item)));
        } catch (...) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool is_builtin_chart(const std::string& name) {
    std::string base;
    std::vector<double> params;
    if (!split_builtin(name, base, params)) return false;
    return base == "flat" || base == "lorentz-flat" || base == "paper-example" ||
           base == "product" || base == "space-form";
}

MetricChart builtin_chart(const std::string& name) {
    std::string base;
    std::vector<double> params;
    if (!split_builtin(name, base, params))
        throw ParseError("malformed builtin name '" + name + "'");

    std::ostringstream doc;
    if (base == "flat") {
        doc << "coords = [t, x, y, z]\n"
               "signature = \"riemannian\"\n"
               "orientation = 1\n\n[metric]\n"
               "g_tt = \"1\"\ng_xx = \"1\"\ng_yy = \"1\"\ng_zz = \"1\"\n";
    } else if (base == "lorentz-flat") {
        doc << "coords = [t, x, y, z]\n"
               "signature = \"lorentzian\"\n"
               "orientation = 1\n\n[metric]\n"
               "g_tt = \"-1\"\ng_xx = \"1\"\ng_yy = \"1\"\ng_zz = \"1\"\n";
    } else if (base == "paper-example") {
        doc << "coords = [r, x, y, z]\n"
               "signature = \"riemannian\"\n"
               "orientation = 1\n"
               "domain = \"x > 0\"\n\n[metric]\n"
               "g_rr = \"(2*x)^3\"\n"
               "g_xx = \"1\"\n"
               "g_yy = \"(2*x)^(-3)\"\n"
               "g_zz = \"1\"\n";
    } else if (base == "product") {
        const double c1 = params.size() > 0 ? params[0] : 1.0;
        const double c2 = params.size() > 1 ? params[1] : 1.0;
        doc << "coords = [x1, y1, x2, y2]\n"
               "signature = \"riemannian\"\n"
               "orientation = 1\n"
               "domain = \"conformal factors positive\"\n\n[metric]\n"
            << "g_x1x1 = \"" << surface_factor(c1, "x1", "y1") << "\"\n"
            << "g_y1y1 = \"" << surface_factor(c1, "x1", "y1") << "\"\n"
            << "g_x2x2 = \"" << surface_factor(c2, "x2", "y2") << "\"\n"
            << "g_y2y2 = \"" << surface_factor(c2, "x2", "y2") << "\"\n";
    } else if (base == "space-form") {
        const double k = params.empty() ? 1.0 : params[0];
        const std::string f =
            "(1 + " + fmt(k / 4.0) + "*(t^2 + x^2 + y^2 + z^2))^(-2)";
        doc << "coords = [t, x, y, z]\n"
               "signature = \"riemannian\"\n"
               "orientation = 1\n"
               "domain = \"conformal factor positive\"\n\n[metric]\n"
            << "g_tt = \"" << f << "\"\ng_xx = \"" << f << "\"\ng_yy = \"" << f
            << "\"\ng_zz = \"" << f << "\"\n";
    } else {
        throw ParseError("unknown builtin chart '" + name + "'");
    }
    return parse_chart(doc.str());
}

MetricChart conformal_rescale(const MetricChart& chart, const ExprPtr& f) {
    MetricChart out = chart;
    const ExprPtr factor = make_call(Func::Exp, make_mul(make_number(2.0), f));
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            const ExprPtr scaled = make_mul(factor, chart.components[i][j]);
            out.components[i][j] = scaled;
            out.components[j][i] = scaled;
        }
    return out;
}

}  // namespace petrov
