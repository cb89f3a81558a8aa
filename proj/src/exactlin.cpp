#include "charslice/exactlin.hpp"

#include <algorithm>
#include <sstream>

namespace charslice::exactlin {

IntMatrix::IntMatrix(int rows, int cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != static_cast<size_t>(rows) * cols)
        throw DimensionError("entry count does not match rows*cols");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    e_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_)
            throw DimensionError("ragged initializer");
        for (long long x : r) e_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionError("matrix product shape mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const Int& a = (*this)(r, k);
            if (a == 0) continue;
            for (int c = 0; c < rhs.cols_; ++c) out(r, c) += a * rhs(k, c);
        }
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("matrix sum shape mismatch");
    IntMatrix out = *this;
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] += rhs.e_[i];
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("matrix difference shape mismatch");
    IntMatrix out = *this;
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] -= rhs.e_[i];
    return out;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix out = *this;
    for (auto& x : out.e_) x = -x;
    return out;
}

bool IntMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Int& x) { return x == 0; });
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int r = 0; r < rows_; ++r) {
        os << (r ? ", [" : "[");
        for (int c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c);
        os << "]";
    }
    os << "]";
    return os.str();
}

Int det(const IntMatrix& m) {
    if (!m.square()) throw DimensionError("determinant of non-square matrix");
    const int n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int sign = 1, prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a(i, k) != 0) { piv = i; break; }
            if (piv < 0) return 0;
            for (int c = k; c < n; ++c) std::swap(a(k, c), a(piv, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                // Bareiss update; the division is exact.
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

struct SnfWork {
    IntMatrix d, p, q;

    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int c = 0; c < d.cols(); ++c) std::swap(d(a, c), d(b, c));
        for (int c = 0; c < p.cols(); ++c) std::swap(p(a, c), p(b, c));
    }
    void swap_cols(int a, int b) {
        if (a == b) return;
        for (int r = 0; r < d.rows(); ++r) std::swap(d(r, a), d(r, b));
        for (int r = 0; r < q.rows(); ++r) std::swap(q(r, a), q(r, b));
    }
    // row a -= f * row b
    void row_sub(int a, const Int& f, int b) {
        if (f == 0) return;
        for (int c = 0; c < d.cols(); ++c) d(a, c) -= f * d(b, c);
        for (int c = 0; c < p.cols(); ++c) p(a, c) -= f * p(b, c);
    }
    // col a -= f * col b
    void col_sub(int a, const Int& f, int b) {
        if (f == 0) return;
        for (int r = 0; r < d.rows(); ++r) d(r, a) -= f * d(r, b);
        for (int r = 0; r < q.rows(); ++r) q(r, a) -= f * q(r, b);
    }
    void negate_row(int a) {
        for (int c = 0; c < d.cols(); ++c) d(a, c) = -d(a, c);
        for (int c = 0; c < p.cols(); ++c) p(a, c) = -p(a, c);
    }
};

}  // namespace

SmithNormalForm smith_normal_form(const IntMatrix& m) {
    SnfWork w{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
    const int r = m.rows(), c = m.cols();
    const int steps = std::min(r, c);

    for (int t = 0; t < steps; ++t) {
        for (;;) {
            // Smallest nonzero magnitude in the trailing submatrix,
            // ties broken by (row, col).
            int pi = -1, pj = -1;
            Int best;
            for (int i = t; i < r; ++i)
                for (int j = t; j < c; ++j) {
                    const Int& x = w.d(i, j);
                    if (x == 0) continue;
                    Int ax = abs_int(x);
                    if (pi < 0 || ax < best) { best = ax; pi = i; pj = j; }
                }
            if (pi < 0) {
                // trailing submatrix is zero; done entirely
                t = steps;
                break;
            }
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);

            bool clean = true;
            for (int i = t + 1; i < r; ++i) {
                if (w.d(i, t) == 0) continue;
                Int f = w.d(i, t) / w.d(t, t);
                w.row_sub(i, f, t);
                if (w.d(i, t) != 0) clean = false;  // remainder; smaller pivot exists
            }
            for (int j = t + 1; j < c; ++j) {
                if (w.d(t, j) == 0) continue;
                Int f = w.d(t, j) / w.d(t, t);
                w.col_sub(j, f, t);
                if (w.d(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Enforce d_t | d(i,j) for the rest of the submatrix.
            bool divides = true;
            for (int i = t + 1; i < r && divides; ++i)
                for (int j = t + 1; j < c; ++j)
                    if (w.d(i, j) % w.d(t, t) != 0) {
                        w.row_sub(t, Int(-1), i);  // fold row i into the pivot row
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (t >= steps) break;
    }
    for (int i = 0; i < steps; ++i)
        if (w.d(i, i) < 0) w.negate_row(i);
    return {std::move(w.p), std::move(w.d), std::move(w.q)};
}

std::vector<std::vector<Int>> kernel_basis(const IntMatrix& m) {
    SmithNormalForm snf = smith_normal_form(m);
    std::vector<std::vector<Int>> basis;
    const int steps = std::min(m.rows(), m.cols());
    for (int j = 0; j < m.cols(); ++j) {
        if (j < steps && snf.d(j, j) != 0) continue;
        std::vector<Int> col(m.cols());
        for (int i = 0; i < m.cols(); ++i) col[i] = snf.q(i, j);
        basis.push_back(std::move(col));
    }
    return basis;
}

LaurentPoly::LaurentPoly(long lowest_exponent, std::vector<Int> coeffs)
    : low_(lowest_exponent), c_(std::move(coeffs)) {
    canonicalize();
}

LaurentPoly LaurentPoly::constant(Int c) { return LaurentPoly(0, {std::move(c)}); }

LaurentPoly LaurentPoly::monomial(Int c, long exponent) {
    return LaurentPoly(exponent, {std::move(c)});
}

void LaurentPoly::canonicalize() {
    size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead == c_.size()) {
        c_.clear();
        low_ = 0;
        return;
    }
    size_t tail = c_.size();
    while (tail > lead && c_[tail - 1] == 0) --tail;
    c_ = std::vector<Int>(c_.begin() + lead, c_.begin() + tail);
    low_ += static_cast<long>(lead);
}

Int LaurentPoly::coefficient(long exponent) const {
    if (is_zero() || exponent < low_ || exponent > highest_exponent()) return 0;
    return c_[static_cast<size_t>(exponent - low_)];
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
    if (is_zero()) return rhs;
    if (rhs.is_zero()) return *this;
    long low = std::min(low_, rhs.low_);
    long high = std::max(highest_exponent(), rhs.highest_exponent());
    std::vector<Int> out(static_cast<size_t>(high - low + 1));
    for (size_t i = 0; i < c_.size(); ++i) out[low_ - low + i] += c_[i];
    for (size_t i = 0; i < rhs.c_.size(); ++i) out[rhs.low_ - low + i] += rhs.c_[i];
    return LaurentPoly(low, std::move(out));
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out = *this;
    for (auto& x : out.c_) x = -x;
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const { return *this + (-rhs); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return LaurentPoly();
    std::vector<Int> out(c_.size() + rhs.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += c_[i] * rhs.c_[j];
    }
    return LaurentPoly(low_ + rhs.low_, std::move(out));
}

Int LaurentPoly::evaluate_int(const Int& t) const {
    if (is_zero()) return 0;
    if (low_ < 0 && t != 1 && t != -1)
        throw ArgumentError("integer evaluation with negative exponents needs t = +-1");
    Int acc = 0;
    // Horner over the stored coefficient window, then shift by t^low.
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    if (low_ != 0) {
        Int shift = 1;
        long k = low_ < 0 ? -low_ : low_;  // t^{-k} = t^k for t = +-1
        for (long i = 0; i < k; ++i) shift *= t;
        acc *= shift;
    }
    return acc;
}

std::complex<double> LaurentPoly::evaluate(std::complex<double> t) const {
    std::complex<double> acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * t + std::complex<double>(static_cast<double>(*it), 0.0);
    return acc * std::pow(t, static_cast<double>(low_));
}

LaurentPoly LaurentPoly::normalized() const {
    if (is_zero()) return *this;
    LaurentPoly out = *this;
    out.low_ = 0;
    if (out.c_.front() < 0)
        for (auto& x : out.c_) x = -x;
    return out;
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long e = highest_exponent(); e >= low_; --e) {
        Int co = coefficient(e);
        if (co == 0) continue;
        bool neg = co < 0;
        Int mag = neg ? Int(-co) : co;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (mag != 1 || e == 0) os << mag;
        if (e == 1) os << "t";
        else if (e != 0) os << "t^" << e;
    }
    return os.str();
}

LaurentPoly alexander_polynomial(const IntMatrix& v, const IntMatrix& u) {
    if (!v.square() || !u.square() || v.rows() != u.rows())
        throw DimensionError("V, U must be square of equal size");
    const int n = v.rows();
    if (n == 0) return LaurentPoly::constant(1);
    if (n > 20) throw ArgumentError("matrix too large for expansion determinant");

    // Entries of tU - V, each of degree <= 1.
    std::vector<LaurentPoly> entry(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            entry[static_cast<size_t>(i) * n + j] =
                LaurentPoly::monomial(u(i, j), 1) - LaurentPoly::constant(v(i, j));

    // Determinant by expansion over column subsets: f[mask] collects terms
    // where the first popcount(mask) rows use exactly the columns in mask.
    std::vector<LaurentPoly> f(size_t(1) << n);
    f[0] = LaurentPoly::constant(1);
    for (uint32_t mask = 0; mask + 1 < f.size(); ++mask) {
        if (f[mask].is_zero()) continue;
        int row = __builtin_popcount(mask);
        int below = 0;
        for (int j = 0; j < n; ++j) {
            uint32_t bit = uint32_t(1) << j;
            if (mask & bit) { ++below; continue; }
            const LaurentPoly& e = entry[static_cast<size_t>(row) * n + j];
            if (e.is_zero()) continue;
            LaurentPoly term = f[mask] * e;
            // row - below = used columns right of j = inversions this step adds
            f[mask | bit] = ((row - below) % 2 == 0) ? f[mask | bit] + term : f[mask | bit] - term;
        }
    }
    return f[f.size() - 1];
}

IntMatrix block_circulant(const IntMatrix& v, const IntMatrix& u, int n) {
    if (!v.square() || !u.square() || v.rows() != u.rows())
        throw DimensionError("V, U must be square of equal size");
    if (n < 2) throw ArgumentError("block_circulant needs n >= 2");
    const int b = v.rows();
    IntMatrix a(b * n, b * n);
    for (int blk = 0; blk < n; ++blk) {
        int nxt = (blk + 1) % n;
        for (int i = 0; i < b; ++i)
            for (int j = 0; j < b; ++j) {
                a(blk * b + i, blk * b + j) = v(i, j);
                a(blk * b + i, nxt * b + j) = -u(i, j);
            }
    }
    return a;
}

Int AbelianInvariants::order() const {
    if (free_rank > 0) return 0;
    Int o = 1;
    for (const auto& d : torsion) o *= d;
    return o;
}

std::string AbelianInvariants::to_string() const {
    if (trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& d : torsion) {
        os << (first ? "" : " + ") << "Z/" << d;
        first = false;
    }
    for (int i = 0; i < free_rank; ++i) {
        os << (first ? "" : " + ") << "Z";
        first = false;
    }
    return os.str();
}

namespace {

AbelianInvariants cokernel_invariants(const IntMatrix& a) {
    SmithNormalForm snf = smith_normal_form(a);
    AbelianInvariants inv;
    const int steps = std::min(a.rows(), a.cols());
    for (int i = 0; i < steps; ++i) {
        const Int& d = snf.d(i, i);
        if (d == 0) ++inv.free_rank;
        else if (d > 1) inv.torsion.push_back(d);
    }
    // generators beyond the relator count are free
    inv.free_rank += std::max(0, a.rows() - a.cols());
    return inv;
}

}  // namespace

AbelianInvariants branched_cover_homology(const IntMatrix& v, const IntMatrix& u, int n) {
    return cokernel_invariants(block_circulant(v, u, n));
}

AbelianInvariants cyclic_cover_homology(const IntMatrix& v, const IntMatrix& u, int n) {
    AbelianInvariants inv = branched_cover_homology(v, u, n);
    inv.free_rank += 1;  // the meridian class survives unbranched covers
    return inv;
}

}  // namespace charslice::exactlin
