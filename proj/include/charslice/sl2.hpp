#ifndef CHARSLICE_SL2_HPP
#define CHARSLICE_SL2_HPP

#include <complex>
#include <cstdlib>
#include <optional>
#include <span>
#include <vector>

#include "charslice/errors.hpp"

namespace charslice::sl2 {

using Complex = std::complex<double>;

/// 2x2 complex matrix, row-major (a b; c d). Values admitted into
/// representations are expected to satisfy |det - 1| <= eps_det.
struct Sl2 {
    Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};

    Complex det() const { return a * d - b * c; }
    Complex trace() const { return a + d; }
};

inline constexpr double kEpsDet = 1e-9;
inline constexpr double kEpsRel = 1e-8;

Sl2 one();
Sl2 quat_i();
Sl2 quat_j();
Sl2 quat_k();
Sl2 diagonal(Complex lambda);  // diag(lambda, 1/lambda)

Sl2 mul(const Sl2& lhs, const Sl2& rhs);
/// Adjugate divided by the determinant; exact inverse for any invertible input.
Sl2 inv(const Sl2& m);
inline Complex trace(const Sl2& m) { return m.trace(); }
Sl2 negate(const Sl2& m);
Sl2 scale(Complex s, const Sl2& m);
Sl2 power(const Sl2& m, long n);  // n may be negative

double frobenius(const Sl2& m);
double frobenius_distance(const Sl2& lhs, const Sl2& rhs);
/// min(|A - B|_F, |A + B|_F); several comparisons here only hold up to sign.
double frobenius_distance_up_to_sign(const Sl2& lhs, const Sl2& rhs);

bool approx_equal(const Sl2& lhs, const Sl2& rhs, double tol = kEpsRel);
bool is_unit_det(const Sl2& m, double eps_det = kEpsDet);

/// Reduced word in a free group: letters are signed 1-based generator
/// indices (+i for g_i, -i for g_i^{-1}). Free reduction is applied at
/// construction so equal words compare equal.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<int> letters);

    static Word generator(int index) { return Word({index}); }

    const std::vector<int>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    size_t length() const { return letters_.size(); }

    Word operator*(const Word& rhs) const;  // concatenation + reduction
    Word inverse() const;
    Word conjugated_by(const Word& g) const { return g * *this * g.inverse(); }
    Word pow(int n) const;

    /// Largest generator index referenced; 0 for the empty word.
    int max_generator() const;
    /// Exponent sum of generator `index` (1-based).
    long exponent_sum(int index) const;

    bool operator==(const Word& rhs) const = default;

private:
    std::vector<int> letters_;
};

/// Left-to-right product of the assigned matrices; the empty word gives 1.
/// `assignment[i]` is the value of generator i+1.
Sl2 evaluate_word(std::span<const Sl2> assignment, const Word& w);

/// Smallest n in [1, max_n] with |A^n - 1|_F <= tol, if any.
std::optional<int> matrix_order(const Sl2& m, int max_n, double tol = kEpsRel);

}  // namespace charslice::sl2

#endif
