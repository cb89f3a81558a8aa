#ifndef CHARSLICE_TWOBRIDGE_HPP
#define CHARSLICE_TWOBRIDGE_HPP

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "charslice/exactlin.hpp"
#include "charslice/reps.hpp"
#include "charslice/sl2.hpp"

namespace charslice::twobridge {

using exactlin::Int;
using exactlin::Rational;
using reps::Representation;
using sl2::Complex;
using sl2::Word;

/// Gaussian integer a + b i with arbitrary-precision parts.
struct GaussianInt {
    Int re{0}, im{0};

    GaussianInt() = default;
    GaussianInt(Int r) : re(std::move(r)) {}
    GaussianInt(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}
    GaussianInt(long long r, long long i = 0) : re(r), im(i) {}

    bool is_zero() const { return re == 0 && im == 0; }
    GaussianInt operator+(const GaussianInt& o) const { return {re + o.re, im + o.im}; }
    GaussianInt operator-(const GaussianInt& o) const { return {re - o.re, im - o.im}; }
    GaussianInt operator-() const { return {-re, -im}; }
    GaussianInt operator*(const GaussianInt& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    bool operator==(const GaussianInt& o) const = default;
    Complex to_complex() const {
        return {re.convert_to<double>(), im.convert_to<double>()};
    }
};

/// Polynomial in u with Gaussian-integer coefficients (index = degree).
/// Canonical form strips trailing zero coefficients.
class GaussianPoly {
public:
    GaussianPoly() = default;
    explicit GaussianPoly(std::vector<GaussianInt> coeffs);
    static GaussianPoly constant(GaussianInt c);
    static GaussianPoly variable();  // u

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<GaussianInt>& coefficients() const { return c_; }
    GaussianInt coefficient(int k) const;

    GaussianPoly operator+(const GaussianPoly& o) const;
    GaussianPoly operator-(const GaussianPoly& o) const;
    GaussianPoly operator*(const GaussianPoly& o) const;
    GaussianPoly operator-() const;
    bool operator==(const GaussianPoly& o) const = default;

    Complex evaluate(Complex u) const;
    /// All imaginary parts zero.
    bool is_real() const;
    std::string to_string() const;  // variable named u

private:
    std::vector<GaussianInt> c_;
};

/// 2x2 matrix over Z[i][u].
struct GPMatrix {
    GaussianPoly a, b, c, d;
    GPMatrix mul(const GPMatrix& o) const;
};

/// Riley's matrices at t = -1 with the square root fixed as +i:
/// X = (i, -i; 0, -i), Y = (i, 0; -i u, -i). Symbolic in u.
GPMatrix riley_x_minus1();
GPMatrix riley_y_minus1();
GPMatrix riley_x_inverse_minus1();
GPMatrix riley_y_inverse_minus1();

/// Numeric counterparts at a concrete root u.
sl2::Sl2 riley_x_matrix();
sl2::Sl2 riley_y_matrix(Complex u);

/// Evaluate a word in x (generator 1) and y (generator 2) symbolically.
GPMatrix evaluate_symbolic(const Word& w);

/// Two-bridge knot data: the relator word w of <x, y | w x = y w> plus the
/// determinant p derived from the Riley polynomial (2 deg + 1). A supplied
/// expected determinant is cross-checked.
struct TwoBridgeKnot {
    Word w;
    int p = 0;
    std::string name;  // optional
};

/// Defect matrix rho(w) rho(x) - rho(y) rho(w), symbolic in u. Zero defect
/// (w conjugates x to y freely) raises DegenerateWordError.
GPMatrix riley_defect(const Word& w);

/// The Riley polynomial at t = -1: primitive integer gcd of the four defect
/// entries over Q(i), normalized to positive leading coefficient. Throws
/// ComputationError if imaginary content survives normalization.
GaussianPoly riley_polynomial_minus1(const Word& w);

/// Builds the knot from its relator word: computes the polynomial, derives
/// p and checks it against expected_p when given.
TwoBridgeKnot make_two_bridge(const Word& w, std::optional<int> expected_p = std::nullopt,
                              std::string name = {});

/// u_k = 2 cos(2 k pi / p) - 2 for k = 1 .. (p-1)/2, ascending k.
std::vector<double> closed_form_roots(int p);

/// Numeric roots of an integer polynomial via companion-matrix eigenvalues,
/// polished by one Newton step.
std::vector<Complex> polynomial_roots(const GaussianPoly& poly);

/// The two-bridge group presentation <x, y | w x w^-1 y^-1>, both
/// generators meridional.
presentation::Presentation two_bridge_group(const Word& w);

/// rho_k for k = 1..(p-1)/2 (Riley matrices at u = u_k), then the abelian
/// phi_{sqrt(-1)}. Every rho_k must verify and be metabelian.
std::vector<Representation> explicit_metabelian_reps(const TwoBridgeKnot& knot,
                                                     const reps::Tolerances& tol = {});

/// Order of rho(x y^-1), which must divide p.
int gamma_order_check(const Representation& rep, int p);

/// Built-in relator words in the standard two-bridge normal form: for
/// b(p, q) the word is x^{e_1} y^{e_2} ... y^{e_{p-1}} with
/// e_i = (-1)^{floor(i q / p)}.
struct RegistryEntry {
    std::string name;
    int p, q;
    std::string word;    // over labels x, y
    std::string source;  // where the normal form comes from
};
const std::vector<RegistryEntry>& knot_registry();
std::optional<RegistryEntry> registry_lookup(const std::string& name);
Word registry_word(const RegistryEntry& entry);

}  // namespace charslice::twobridge

#endif
