#include "charslice/presentation.hpp"

#include <algorithm>
#include <sstream>

namespace charslice::presentation {

using exactlin::Int;

void Presentation::validate() const {
    if (weights.size() != labels.size())
        throw DataConsistencyError("weights/labels size mismatch");
    if (meridian && (*meridian < 0 || *meridian >= generator_count()))
        throw DataConsistencyError("meridian index out of range");
    for (const Word& r : relators)
        if (r.max_generator() > generator_count())
            throw LookupError("relator references unknown generator");
}

IntMatrix exponent_matrix(const std::vector<Word>& words, int gens) {
    IntMatrix m(static_cast<int>(words.size()), gens);
    for (size_t i = 0; i < words.size(); ++i) {
        if (words[i].max_generator() > gens)
            throw LookupError("word references generator beyond range");
        for (int j = 0; j < gens; ++j)
            m(static_cast<int>(i), j) = words[i].exponent_sum(j + 1);
    }
    return m;
}

void LinPresentation::validate() const {
    const int g2 = 2 * genus;
    if (static_cast<int>(alpha.size()) != g2 || static_cast<int>(beta.size()) != g2)
        throw DataConsistencyError("need 2g alpha and 2g beta words");
    if (seifert_q.rows() != g2 || seifert_q.cols() != g2 ||
        gluing_t.rows() != g2 || gluing_t.cols() != g2)
        throw DimensionError("Q and T must be 2g x 2g");
    if (genus == 0) return;

    Int dt = exactlin::det(gluing_t);
    if (dt != 1 && dt != -1)
        throw DataConsistencyError("gluing matrix must have determinant +-1");
    derive_vu(*this);  // exponent-sum cross-check

    IntMatrix v = seifert_q.transpose() * gluing_t;
    IntMatrix u = seifert_q * gluing_t;
    Int dvu = exactlin::det(v - u);
    if (dvu != 1 && dvu != -1)
        throw DataConsistencyError("|det(V - U)| != 1; not valid knot data");
}

std::pair<IntMatrix, IntMatrix> derive_vu(const LinPresentation& lp) {
    const int g2 = 2 * lp.genus;
    IntMatrix v = lp.seifert_q.transpose() * lp.gluing_t;
    IntMatrix u = lp.seifert_q * lp.gluing_t;
    if (exponent_matrix(lp.alpha, g2) != v)
        throw DataConsistencyError("alpha exponent sums disagree with Q^T * T");
    if (exponent_matrix(lp.beta, g2) != u)
        throw DataConsistencyError("beta exponent sums disagree with Q * T");
    return {std::move(v), std::move(u)};
}

Presentation knot_group(const LinPresentation& lp) {
    lp.validate();
    const int g2 = 2 * lp.genus;
    Presentation p;
    for (int i = 1; i <= g2; ++i) p.labels.push_back("x" + std::to_string(i));
    p.labels.push_back("mu");
    p.weights.assign(g2, 0);
    p.weights.push_back(1);
    p.meridian = g2;

    const Word mu = Word::generator(g2 + 1);
    for (int i = 0; i < g2; ++i)
        p.relators.push_back(mu * lp.alpha[i] * mu.inverse() * lp.beta[i].inverse());
    return p;
}

int lift_generator_index(const LiftInfo& info, int i, int j) {
    return j * 2 * info.genus + (i - 1);
}

namespace {

// Replace x_k by x{k}_{j}: letter k -> lift index of (k, j), 1-based.
Word lift_word(const Word& w, const LiftInfo& info, int j) {
    std::vector<int> letters;
    letters.reserve(w.length());
    for (int x : w.letters()) {
        int idx = lift_generator_index(info, std::abs(x), j) + 1;
        letters.push_back(x > 0 ? idx : -idx);
    }
    return Word(std::move(letters));
}

Presentation lift_common(const LinPresentation& lp, int n, bool with_meridian) {
    if (n < 2) throw ArgumentError("cover degree must be >= 2");
    lp.validate();
    const int g2 = 2 * lp.genus;
    LiftInfo info{lp.genus, n, with_meridian};

    Presentation p;
    p.lift = info;
    for (int j = 0; j < n; ++j)
        for (int i = 1; i <= g2; ++i)
            p.labels.push_back("x" + std::to_string(i) + "_" + std::to_string(j));
    p.weights.assign(static_cast<size_t>(g2) * n, 0);
    if (with_meridian) {
        p.labels.push_back("mu_" + std::to_string(n));
        p.weights.push_back(n);
        p.meridian = g2 * n;
    }

    const int mu_idx = g2 * n + 1;  // 1-based, only valid when with_meridian
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < g2; ++i) {
            Word a = lift_word(lp.alpha[i], info, j);
            Word b = lift_word(lp.beta[i], info, (j + 1) % n);
            if (with_meridian && j == n - 1) {
                Word mu = Word::generator(mu_idx);
                p.relators.push_back(mu * a * mu.inverse() * b.inverse());
            } else {
                p.relators.push_back(a * b.inverse());
            }
        }
    }
    return p;
}

}  // namespace

Presentation lift_cn(const LinPresentation& lp, int n) { return lift_common(lp, n, true); }

Presentation lift_sigman(const LinPresentation& lp, int n) { return lift_common(lp, n, false); }

Word tau_action(const Presentation& p, const Word& w) {
    if (!p.lift) throw ArgumentError("tau action needs a lift presentation");
    const LiftInfo& info = *p.lift;
    const int g2 = 2 * info.genus;
    const int lifted = g2 * info.n;
    std::vector<int> letters;
    letters.reserve(w.length());
    for (int x : w.letters()) {
        int idx = std::abs(x) - 1;  // 0-based
        if (idx >= lifted) {
            if (!info.has_meridian || idx > lifted)
                throw LookupError("word references generator outside the lift");
            letters.push_back(x);  // covering meridian is fixed
            continue;
        }
        int i = idx % g2, j = idx / g2;
        int shifted = ((j + 1) % info.n) * g2 + i + 1;
        letters.push_back(x > 0 ? shifted : -shifted);
    }
    return Word(std::move(letters));
}

long abelianization_exponent(const Presentation& p, const Word& w) {
    long s = 0;
    for (int x : w.letters()) {
        int idx = std::abs(x) - 1;
        if (idx >= p.generator_count())
            throw LookupError("word references unknown generator");
        s += (x > 0 ? 1 : -1) * p.weights[idx];
    }
    return s;
}

IntMatrix abelianized_relator_matrix(const Presentation& p) {
    return exponent_matrix(p.relators, p.generator_count());
}

Word parse_word(const std::string& text, const std::vector<std::string>& labels) {
    std::istringstream is(text);
    std::string tok;
    std::vector<int> letters;
    while (is >> tok) {
        int exp = 1;
        std::string name = tok;
        if (auto caret = tok.find('^'); caret != std::string::npos) {
            name = tok.substr(0, caret);
            try {
                exp = std::stoi(tok.substr(caret + 1));
            } catch (const std::exception&) {
                throw ArgumentError("bad exponent in word token '" + tok + "'");
            }
        }
        auto it = std::find(labels.begin(), labels.end(), name);
        if (it == labels.end()) throw LookupError("unknown generator '" + name + "'");
        int idx = static_cast<int>(it - labels.begin()) + 1;
        for (int k = 0; k < std::abs(exp); ++k) letters.push_back(exp > 0 ? idx : -idx);
    }
    return Word(std::move(letters));
}

std::string word_to_string(const Word& w, const std::vector<std::string>& labels) {
    std::ostringstream os;
    bool first = true;
    for (int x : w.letters()) {
        size_t idx = static_cast<size_t>(std::abs(x)) - 1;
        if (idx >= labels.size()) throw LookupError("letter outside label range");
        if (!first) os << " ";
        os << labels[idx];
        if (x < 0) os << "^-1";
        first = false;
    }
    return os.str();
}

}  // namespace charslice::presentation
