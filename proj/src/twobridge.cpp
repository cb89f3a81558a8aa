#include "charslice/twobridge.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace charslice::twobridge {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

GaussianPoly::GaussianPoly(std::vector<GaussianInt> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

GaussianPoly GaussianPoly::constant(GaussianInt c) { return GaussianPoly({std::move(c)}); }

GaussianPoly GaussianPoly::variable() { return GaussianPoly({GaussianInt(0), GaussianInt(1)}); }

GaussianInt GaussianPoly::coefficient(int k) const {
    if (k < 0 || k > degree()) return GaussianInt(0);
    return c_[static_cast<size_t>(k)];
}

GaussianPoly GaussianPoly::operator+(const GaussianPoly& o) const {
    std::vector<GaussianInt> out(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < c_.size(); ++i) out[i] = out[i] + c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) out[i] = out[i] + o.c_[i];
    return GaussianPoly(std::move(out));
}

GaussianPoly GaussianPoly::operator-() const {
    std::vector<GaussianInt> out = c_;
    for (auto& x : out) x = -x;
    GaussianPoly p;
    p.c_ = std::move(out);
    return p;
}

GaussianPoly GaussianPoly::operator-(const GaussianPoly& o) const { return *this + (-o); }

GaussianPoly GaussianPoly::operator*(const GaussianPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<GaussianInt> out(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] = out[i + j] + c_[i] * o.c_[j];
    return GaussianPoly(std::move(out));
}

Complex GaussianPoly::evaluate(Complex u) const {
    Complex acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * u + it->to_complex();
    return acc;
}

bool GaussianPoly::is_real() const {
    return std::all_of(c_.begin(), c_.end(), [](const GaussianInt& g) { return g.im == 0; });
}

std::string GaussianPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const GaussianInt& g = c_[static_cast<size_t>(k)];
        if (g.is_zero()) continue;
        std::string coeff;
        bool neg = false;
        if (g.im == 0) {
            Int mag = g.re < 0 ? Int(-g.re) : g.re;
            neg = g.re < 0;
            if (mag != 1 || k == 0) coeff = mag.str();
        } else if (g.re == 0) {
            Int mag = g.im < 0 ? Int(-g.im) : g.im;
            neg = g.im < 0;
            coeff = (mag == 1 ? std::string("i") : mag.str() + "i");
        } else {
            coeff = "(" + g.re.str() + (g.im > 0 ? "+" : "") + g.im.str() + "i)";
        }
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        os << coeff;
        if (k == 1) os << "u";
        else if (k > 1) os << "u^" << k;
    }
    return os.str();
}

GPMatrix GPMatrix::mul(const GPMatrix& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

namespace {

GaussianPoly gp_const(long long re, long long im = 0) {
    return GaussianPoly::constant(GaussianInt(re, im));
}

GaussianPoly gp_iu(long long scale) {
    // scale * i * u
    return GaussianPoly({GaussianInt(0), GaussianInt(0, scale)});
}

}  // namespace

GPMatrix riley_x_minus1() {
    return {gp_const(0, 1), gp_const(0, -1), gp_const(0), gp_const(0, -1)};
}

GPMatrix riley_y_minus1() {
    return {gp_const(0, 1), gp_const(0), gp_iu(-1), gp_const(0, -1)};
}

GPMatrix riley_x_inverse_minus1() {
    // adjugate; det X = 1
    return {gp_const(0, -1), gp_const(0, 1), gp_const(0), gp_const(0, 1)};
}

GPMatrix riley_y_inverse_minus1() {
    return {gp_const(0, -1), gp_const(0), gp_iu(1), gp_const(0, 1)};
}

sl2::Sl2 riley_x_matrix() {
    return {Complex(0, 1), Complex(0, -1), Complex(0, 0), Complex(0, -1)};
}

sl2::Sl2 riley_y_matrix(Complex u) {
    return {Complex(0, 1), Complex(0, 0), Complex(0, -1) * u, Complex(0, -1)};
}

GPMatrix evaluate_symbolic(const Word& w) {
    GPMatrix acc{gp_const(1), gp_const(0), gp_const(0), gp_const(1)};
    for (int x : w.letters()) {
        GPMatrix m;
        switch (x) {
            case 1: m = riley_x_minus1(); break;
            case -1: m = riley_x_inverse_minus1(); break;
            case 2: m = riley_y_minus1(); break;
            case -2: m = riley_y_inverse_minus1(); break;
            default:
                throw LookupError("two-bridge words use generators x (1) and y (2) only");
        }
        acc = acc.mul(m);
    }
    return acc;
}

GPMatrix riley_defect(const Word& w) {
    if (w.empty()) throw DegenerateWordError("empty relator word");
    GPMatrix rw = evaluate_symbolic(w);
    GPMatrix lhs = rw.mul(riley_x_minus1());
    GPMatrix rhs = riley_y_minus1().mul(rw);
    GPMatrix d{lhs.a - rhs.a, lhs.b - rhs.b, lhs.c - rhs.c, lhs.d - rhs.d};
    if (d.a.is_zero() && d.b.is_zero() && d.c.is_zero() && d.d.is_zero())
        throw DegenerateWordError("defect matrix vanishes identically");
    return d;
}

namespace {

// --- exact arithmetic over Q(i) for the gcd ---

struct GaussianRational {
    Rational re{0}, im{0};

    bool is_zero() const { return re == 0 && im == 0; }
    GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianRational operator/(const GaussianRational& o) const {
        Rational n = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
    }
};

using QPoly = std::vector<GaussianRational>;  // index = degree

void qp_trim(QPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

QPoly qp_from(const GaussianPoly& g) {
    QPoly out;
    for (const auto& c : g.coefficients())
        out.push_back({Rational(c.re), Rational(c.im)});
    qp_trim(out);
    return out;
}

// remainder of a modulo b (b nonzero)
QPoly qp_mod(QPoly a, const QPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        GaussianRational f = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] = a[shift + i] - f * b[i];
        a.pop_back();
        qp_trim(a);
    }
    return a;
}

QPoly qp_monic(QPoly p) {
    if (p.empty()) return p;
    GaussianRational lead = p.back();
    for (auto& c : p) c = c / lead;
    return p;
}

QPoly qp_gcd(QPoly a, QPoly b) {
    qp_trim(a);
    qp_trim(b);
    while (!b.empty()) {
        QPoly r = qp_mod(a, b);
        a = std::move(b);
        b = qp_monic(std::move(r));
    }
    return qp_monic(std::move(a));
}

}  // namespace

GaussianPoly riley_polynomial_minus1(const Word& w) {
    GPMatrix d = riley_defect(w);
    QPoly g;
    for (const GaussianPoly* entry : {&d.a, &d.b, &d.c, &d.d}) {
        if (entry->is_zero()) continue;
        QPoly q = qp_from(*entry);
        g = g.empty() ? qp_monic(std::move(q)) : qp_gcd(std::move(g), std::move(q));
    }
    if (g.empty())
        throw ComputationError("no nonzero defect entries");

    for (const auto& c : g)
        if (c.im != 0)
            throw ComputationError(
                "imaginary content survives normalization; word/convention mismatch");

    // Monic with rational real coefficients -> primitive integer polynomial
    // with positive leading coefficient.
    Int lcm = 1;
    for (const auto& c : g) {
        Int den = denominator(c.re);
        lcm = boost::multiprecision::lcm(lcm, den);
    }
    std::vector<GaussianInt> coeffs;
    Int content = 0;
    for (const auto& c : g) {
        Rational scaled = c.re * lcm;
        Int val = numerator(scaled);  // denominator is 1 by construction
        content = boost::multiprecision::gcd(content, val);
        coeffs.push_back(GaussianInt(val));
    }
    if (content > 1)
        for (auto& c : coeffs) c.re /= content;
    if (coeffs.back().re < 0)
        for (auto& c : coeffs) c.re = -c.re;
    return GaussianPoly(std::move(coeffs));
}

TwoBridgeKnot make_two_bridge(const Word& w, std::optional<int> expected_p, std::string name) {
    GaussianPoly phi = riley_polynomial_minus1(w);
    int p = 2 * phi.degree() + 1;
    if (expected_p && *expected_p != p)
        throw DataConsistencyError("supplied determinant " + std::to_string(*expected_p) +
                                   " does not match derived " + std::to_string(p));
    return {w, p, std::move(name)};
}

std::vector<double> closed_form_roots(int p) {
    if (p < 3 || p % 2 == 0) throw ArgumentError("determinant must be odd and >= 3");
    std::vector<double> roots;
    for (int k = 1; k <= (p - 1) / 2; ++k)
        roots.push_back(2.0 * std::cos(2.0 * k * std::numbers::pi / p) - 2.0);
    return roots;
}

std::vector<Complex> polynomial_roots(const GaussianPoly& poly) {
    int deg = poly.degree();
    if (deg < 1) return {};
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
    Complex lead = poly.coefficient(deg).to_complex();
    for (int i = 0; i < deg; ++i) {
        if (i + 1 < deg) companion(i + 1, i) = 1.0;
        companion(i, deg - 1) = -poly.coefficient(i).to_complex() / lead;
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion);
    std::vector<Complex> roots;
    for (int i = 0; i < deg; ++i) {
        Complex r = solver.eigenvalues()(i);
        // one Newton polish step
        Complex f = poly.evaluate(r);
        Complex df = 0.0;
        for (int k = 1; k <= deg; ++k)
            df += static_cast<double>(k) * poly.coefficient(k).to_complex() *
                  std::pow(r, static_cast<double>(k - 1));
        if (std::abs(df) > 1e-14) r -= f / df;
        roots.push_back(r);
    }
    std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return roots;
}

presentation::Presentation two_bridge_group(const Word& w) {
    presentation::Presentation p;
    p.labels = {"x", "y"};
    p.weights = {1, 1};
    p.meridian = 0;
    Word x = Word::generator(1), y = Word::generator(2);
    p.relators.push_back(w * x * w.inverse() * y.inverse());
    return p;
}

std::vector<Representation> explicit_metabelian_reps(const TwoBridgeKnot& knot,
                                                     const reps::Tolerances& tol) {
    auto group = std::make_shared<const presentation::Presentation>(two_bridge_group(knot.w));
    std::vector<Representation> out;
    if (knot.p >= 3) {
        for (double u : closed_form_roots(knot.p)) {
            Representation rep(group, {riley_x_matrix(), riley_y_matrix(u)}, tol.eps_det);
            if (!rep.verified(tol.eps_rel))
                throw InternalConsistencyError(
                    "closed-form root does not verify; word/convention mismatch");
            if (!reps::is_metabelian(rep, tol.eps_sample))
                throw InternalConsistencyError("slice representative is not metabelian");
            out.push_back(std::move(rep));
        }
    }
    // phi_{sqrt(-1)}: both generators are meridians
    std::vector<sl2::Sl2> ab(2, sl2::diagonal(Complex(0, 1)));
    out.emplace_back(group, std::move(ab), tol.eps_det);
    return out;
}

int gamma_order_check(const Representation& rep, int p) {
    Word gamma = Word::generator(1) * Word::generator(2).inverse();
    std::optional<int> order = sl2::matrix_order(rep.evaluate(gamma), p);
    if (!order) throw ComputationError("rho(x y^-1) has no order <= p");
    if (p % *order != 0)
        throw InternalConsistencyError("order of rho(x y^-1) does not divide p");
    return *order;
}

const std::vector<RegistryEntry>& knot_registry() {
    // Standard two-bridge normal form b(p, q): relator word
    // w = x^{e_1} y^{e_2} x^{e_3} ... y^{e_{p-1}}, e_i = (-1)^{floor(i q / p)}
    // (Schubert normal form reduced Wirtinger presentation; the q values are
    // the usual odd representatives, 6_1 up to mirror image). Each word is
    // certified by the factorization of its Riley polynomial at t = -1.
    static const std::vector<RegistryEntry> registry = [] {
        auto word_for = [](int p, int q) {
            std::ostringstream os;
            for (int i = 1; i < p; ++i) {
                int e = ((i * q / p) % 2 == 0) ? 1 : -1;
                os << (i > 1 ? " " : "") << (i % 2 == 1 ? "x" : "y");
                if (e < 0) os << "^-1";
            }
            return os.str();
        };
        std::vector<RegistryEntry> r;
        r.push_back({"3_1", 3, 1, word_for(3, 1), "b(3,1), torus knot presentation <x,y | xyx = yxy>"});
        r.push_back({"4_1", 5, 3, word_for(5, 3), "b(5,3), figure-eight"});
        r.push_back({"5_1", 5, 1, word_for(5, 1), "b(5,1), (2,5) torus knot"});
        r.push_back({"5_2", 7, 3, word_for(7, 3), "b(7,3), twist knot"});
        r.push_back({"6_1", 9, 5, word_for(9, 5), "b(9,5), twist knot (mirror-ambiguous)"});
        r.push_back({"6_2", 11, 3, word_for(11, 3), "b(11,3)"});
        return r;
    }();
    return registry;
}

std::optional<RegistryEntry> registry_lookup(const std::string& name) {
    for (const auto& e : knot_registry())
        if (e.name == name) return e;
    return std::nullopt;
}

Word registry_word(const RegistryEntry& entry) {
    return presentation::parse_word(entry.word, {"x", "y"});
}

}  // namespace charslice::twobridge
