#include "charslice/sl2.hpp"

#include <cmath>

namespace charslice::sl2 {

Sl2 one() { return {1.0, 0.0, 0.0, 1.0}; }
Sl2 quat_i() { return {Complex(0, 1), 0.0, 0.0, Complex(0, -1)}; }
Sl2 quat_j() { return {0.0, 1.0, -1.0, 0.0}; }
Sl2 quat_k() { return {0.0, Complex(0, 1), Complex(0, 1), 0.0}; }

Sl2 diagonal(Complex lambda) { return {lambda, 0.0, 0.0, 1.0 / lambda}; }

Sl2 mul(const Sl2& l, const Sl2& r) {
    return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
            l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
}

Sl2 inv(const Sl2& m) {
    Complex det = m.det();
    return {m.d / det, -m.b / det, -m.c / det, m.a / det};
}

Sl2 negate(const Sl2& m) { return {-m.a, -m.b, -m.c, -m.d}; }

Sl2 scale(Complex s, const Sl2& m) { return {s * m.a, s * m.b, s * m.c, s * m.d}; }

Sl2 power(const Sl2& m, long n) {
    Sl2 base = n < 0 ? inv(m) : m;
    long k = std::labs(n);
    Sl2 acc = one();
    while (k > 0) {
        if (k & 1) acc = mul(acc, base);
        base = mul(base, base);
        k >>= 1;
    }
    return acc;
}

double frobenius(const Sl2& m) {
    return std::sqrt(std::norm(m.a) + std::norm(m.b) + std::norm(m.c) + std::norm(m.d));
}

double frobenius_distance(const Sl2& l, const Sl2& r) {
    return frobenius({l.a - r.a, l.b - r.b, l.c - r.c, l.d - r.d});
}

double frobenius_distance_up_to_sign(const Sl2& l, const Sl2& r) {
    return std::min(frobenius_distance(l, r), frobenius_distance(l, negate(r)));
}

bool approx_equal(const Sl2& l, const Sl2& r, double tol) {
    return frobenius_distance(l, r) <= tol;
}

bool is_unit_det(const Sl2& m, double eps_det) {
    return std::abs(m.det() - Complex(1.0)) <= eps_det;
}

Word::Word(std::vector<int> letters) {
    letters_.reserve(letters.size());
    for (int x : letters) {
        if (x == 0) throw ArgumentError("word letters are nonzero signed indices");
        if (!letters_.empty() && letters_.back() == -x) letters_.pop_back();
        else letters_.push_back(x);
    }
}

Word Word::operator*(const Word& rhs) const {
    std::vector<int> cat = letters_;
    cat.insert(cat.end(), rhs.letters_.begin(), rhs.letters_.end());
    return Word(std::move(cat));
}

Word Word::inverse() const {
    std::vector<int> rev(letters_.rbegin(), letters_.rend());
    for (int& x : rev) x = -x;
    Word w;
    w.letters_ = std::move(rev);  // inverse of a reduced word is reduced
    return w;
}

Word Word::pow(int n) const {
    Word acc;
    Word base = n < 0 ? inverse() : *this;
    for (int i = 0; i < std::abs(n); ++i) acc = acc * base;
    return acc;
}

int Word::max_generator() const {
    int m = 0;
    for (int x : letters_) m = std::max(m, std::abs(x));
    return m;
}

long Word::exponent_sum(int index) const {
    long s = 0;
    for (int x : letters_) {
        if (x == index) ++s;
        else if (x == -index) --s;
    }
    return s;
}

Sl2 evaluate_word(std::span<const Sl2> assignment, const Word& w) {
    Sl2 acc = one();
    for (int x : w.letters()) {
        size_t idx = static_cast<size_t>(std::abs(x)) - 1;
        if (idx >= assignment.size())
            throw LookupError("word references generator " + std::to_string(std::abs(x)) +
                              " with no assigned value");
        acc = mul(acc, x > 0 ? assignment[idx] : inv(assignment[idx]));
    }
    return acc;
}

std::optional<int> matrix_order(const Sl2& m, int max_n, double tol) {
    if (max_n < 1) throw ArgumentError("matrix_order needs max_n >= 1");
    Sl2 acc = m;
    for (int n = 1; n <= max_n; ++n) {
        if (frobenius_distance(acc, one()) <= tol) return n;
        acc = mul(acc, m);
    }
    return std::nullopt;
}

}  // namespace charslice::sl2
