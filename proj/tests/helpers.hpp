#ifndef CHARSLICE_TEST_HELPERS_HPP
#define CHARSLICE_TEST_HELPERS_HPP

#include <random>
#include <vector>

#include "charslice/exactlin.hpp"
#include "charslice/presentation.hpp"

namespace charslice::testing {

using exactlin::Int;
using exactlin::IntMatrix;
using presentation::LinPresentation;
using sl2::Word;

/// Random unimodular matrix: identity churned by elementary row operations.
inline IntMatrix random_unimodular(std::mt19937& rng, int n, int ops = 6) {
    IntMatrix t = IntMatrix::identity(n);
    if (n == 0) return t;
    std::uniform_int_distribution<int> row(0, n - 1);
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<int> sign(0, 1);
    for (int k = 0; k < ops; ++k) {
        int a = row(rng), b = row(rng);
        switch (kind(rng)) {
            case 0:
                if (a != b) {
                    int f = sign(rng) ? 1 : -1;
                    for (int c = 0; c < n; ++c) t(a, c) += f * t(b, c);
                }
                break;
            case 1:
                if (a != b)
                    for (int c = 0; c < n; ++c) std::swap(t(a, c), t(b, c));
                break;
            default:
                for (int c = 0; c < n; ++c) t(a, c) = -t(a, c);
        }
    }
    return t;
}

/// Random Seifert matrix: symmetric part free, antisymmetric part pinned to
/// the standard symplectic intersection form (so |det(V-U)| = 1 holds).
inline IntMatrix random_seifert(std::mt19937& rng, int genus, int max_entry = 3) {
    int n = 2 * genus;
    std::uniform_int_distribution<int> entry(-max_entry, max_entry);
    IntMatrix q(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            int v = entry(rng);
            q(i, j) = v;
            q(j, i) = v;
        }
    for (int g = 0; g < genus; ++g) q(2 * g + 1, 2 * g) -= 1;
    return q;
}

/// Word with prescribed exponent sums plus commutator noise.
inline Word word_with_exponents(std::mt19937& rng, const IntMatrix& m, int row, int noise) {
    std::vector<int> letters;
    for (int j = 0; j < m.cols(); ++j) {
        long e = m(row, j).convert_to<long>();
        for (long k = 0; k < std::labs(e); ++k) letters.push_back(e > 0 ? j + 1 : -(j + 1));
    }
    std::uniform_int_distribution<int> pick(1, m.cols());
    for (int k = 0; k < noise; ++k) {
        int a = pick(rng), b = pick(rng);
        if (a == b) continue;
        std::vector<int> comm = {a, b, -a, -b};
        size_t pos = std::uniform_int_distribution<size_t>(0, letters.size())(rng);
        letters.insert(letters.begin() + pos, comm.begin(), comm.end());
    }
    return Word(letters);
}

inline LinPresentation random_lin(std::mt19937& rng, int max_genus = 3, int max_entry = 3,
                                  int word_noise = 2) {
    std::uniform_int_distribution<int> gdist(1, max_genus);
    LinPresentation lp;
    lp.genus = gdist(rng);
    int n = 2 * lp.genus;
    lp.seifert_q = random_seifert(rng, lp.genus, max_entry);
    lp.gluing_t = random_unimodular(rng, n);
    IntMatrix v = lp.seifert_q.transpose() * lp.gluing_t;
    IntMatrix u = lp.seifert_q * lp.gluing_t;
    std::uniform_int_distribution<int> noise(0, word_noise);
    for (int i = 0; i < n; ++i) {
        lp.alpha.push_back(word_with_exponents(rng, v, i, noise(rng)));
        lp.beta.push_back(word_with_exponents(rng, u, i, noise(rng)));
    }
    lp.validate();
    return lp;
}

/// random_lin with |det(V+U)| capped by rejection, so dihedral enumerations
/// stay desk-sized. The determinant distribution is heavy-tailed; roughly
/// 40% of draws land under 400.
inline LinPresentation random_lin_bounded(std::mt19937& rng, int max_genus = 3,
                                          int max_entry = 3, long det_bound = 400) {
    for (;;) {
        LinPresentation lp = random_lin(rng, max_genus, max_entry);
        IntMatrix v = lp.seifert_q.transpose() * lp.gluing_t;
        IntMatrix u = lp.seifert_q * lp.gluing_t;
        Int d = exactlin::det(v + u);
        if (d < 0) d = -d;
        if (d <= det_bound) return lp;
    }
}

/// The worked example data: left-hand trefoil with Q = (1 0; -1 1), T = 1,
/// alpha = (x1 x2^-1, x2), beta = (x1, x1^-1 x2).
inline LinPresentation trefoil_lin() {
    LinPresentation lp;
    lp.genus = 1;
    lp.seifert_q = IntMatrix{{1, 0}, {-1, 1}};
    lp.gluing_t = IntMatrix::identity(2);
    lp.alpha = {Word({1, -2}), Word({2})};
    lp.beta = {Word({1}), Word({-1, 2})};
    lp.validate();
    return lp;
}

}  // namespace charslice::testing

#endif
