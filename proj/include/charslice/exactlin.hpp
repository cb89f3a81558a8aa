#ifndef CHARSLICE_EXACTLIN_HPP
#define CHARSLICE_EXACTLIN_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <string>
#include <vector>

#include "charslice/errors.hpp"

namespace charslice::exactlin {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense integer matrix with arbitrary-precision entries, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}
    IntMatrix(int rows, int cols, std::vector<Int> entries);
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(int n);
    static IntMatrix zero(int rows, int cols) { return IntMatrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Int& operator()(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
    const Int& operator()(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator+(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;
    IntMatrix operator-() const;
    bool operator==(const IntMatrix& rhs) const = default;

    bool is_zero() const;
    std::string to_string() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> e_;
};

/// Exact determinant by fraction-free (Bareiss) elimination. Empty matrix -> 1.
Int det(const IntMatrix& m);

struct SmithNormalForm {
    IntMatrix p;  // unimodular, rows x rows
    IntMatrix d;  // diagonal, divisibility chain, nonnegative diagonal
    IntMatrix q;  // unimodular, cols x cols
};

/// P * M * Q = D with P, Q unimodular and d_1 | d_2 | ... | d_k >= 0.
/// Pivoting: smallest nonzero magnitude, ties broken by (row, col).
SmithNormalForm smith_normal_form(const IntMatrix& m);

/// Columns of Q spanning ker(M) over the integers (from the Smith form).
std::vector<std::vector<Int>> kernel_basis(const IntMatrix& m);

/// Integer Laurent polynomial in one variable t. Canonical form: empty
/// coefficient list is the zero polynomial (lowest_exponent 0); otherwise
/// first and last stored coefficients are nonzero.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long lowest_exponent, std::vector<Int> coeffs);
    static LaurentPoly constant(Int c);
    static LaurentPoly monomial(Int c, long exponent);

    bool is_zero() const { return c_.empty(); }
    long lowest_exponent() const { return low_; }
    long highest_exponent() const { return low_ + static_cast<long>(c_.size()) - 1; }
    const std::vector<Int>& coefficients() const { return c_; }
    Int coefficient(long exponent) const;

    LaurentPoly operator+(const LaurentPoly& rhs) const;
    LaurentPoly operator-(const LaurentPoly& rhs) const;
    LaurentPoly operator*(const LaurentPoly& rhs) const;
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& rhs) const = default;

    /// Exact evaluation at an integer point (negative exponents need |t| = 1).
    Int evaluate_int(const Int& t) const;
    std::complex<double> evaluate(std::complex<double> t) const;

    /// Multiplied by +-t^k so the lowest term is a positive constant.
    LaurentPoly normalized() const;

    std::string to_string() const;

private:
    void canonicalize();
    long low_ = 0;
    std::vector<Int> c_;
};

/// det(tU - V) over Z[t]. V, U square of equal size; empty matrices give 1.
LaurentPoly alexander_polynomial(const IntMatrix& v, const IntMatrix& u);

/// The 2gn x 2gn matrix with V on the block diagonal and -U on the block
/// superdiagonal, wrapping into the lower-left corner: block (i, i) = V,
/// block (i, (i+1) mod n) = -U.
IntMatrix block_circulant(const IntMatrix& v, const IntMatrix& u, int n);

/// Finitely generated abelian group in invariant-factor form.
struct AbelianInvariants {
    std::vector<Int> torsion;  // d_1 | d_2 | ..., each > 1
    int free_rank = 0;

    bool trivial() const { return torsion.empty() && free_rank == 0; }
    Int order() const;  // product of torsion entries; 0 if free_rank > 0
    bool operator==(const AbelianInvariants& rhs) const = default;
    std::string to_string() const;
};

/// H_1 of the n-fold branched cover: cokernel of block_circulant(V, U, n).
AbelianInvariants branched_cover_homology(const IntMatrix& v, const IntMatrix& u, int n);

/// H_1 of the n-fold cyclic (unbranched) cover: the branched answer plus one
/// free summand for the meridian class.
AbelianInvariants cyclic_cover_homology(const IntMatrix& v, const IntMatrix& u, int n);

}  // namespace charslice::exactlin

#endif
