#ifndef CHARSLICE_PRESENTATION_HPP
#define CHARSLICE_PRESENTATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "charslice/exactlin.hpp"
#include "charslice/sl2.hpp"

namespace charslice::presentation {

using exactlin::IntMatrix;
using sl2::Word;

/// Names the lift structure of a presentation produced by lift_cn /
/// lift_sigman, so that index arithmetic (tau action, Phi_n) stays valid.
struct LiftInfo {
    int genus = 0;
    int n = 0;
    bool has_meridian = false;  // true for C_n, false for Sigma_n
};

/// Finitely presented group. Relators are words required to equal the
/// identity. `weights[i]` is the exponent of generator i under the
/// abelianization onto Z = <mu> (meridional generators carry 1, spine
/// generators 0).
struct Presentation {
    std::vector<std::string> labels;
    std::vector<Word> relators;
    std::vector<int> weights;
    std::optional<int> meridian;  // 0-based generator index
    std::optional<LiftInfo> lift;

    int generator_count() const { return static_cast<int>(labels.size()); }
    void validate() const;  // relator letters reference valid generators
};

/// Lin data: genus, relation words alpha_i / beta_i over x_1..x_{2g},
/// Seifert matrix Q and gluing matrix T.
struct LinPresentation {
    int genus = 0;
    std::vector<Word> alpha;  // 2g words
    std::vector<Word> beta;   // 2g words
    IntMatrix seifert_q;      // 2g x 2g
    IntMatrix gluing_t;       // 2g x 2g, |det| = 1

    /// Checks |det T| = 1, word exponent sums against Q^T*T and Q*T, and
    /// |det(V - U)| = 1. Throws DataConsistencyError on any mismatch.
    void validate() const;
};

/// (V, U) = (Q^T * T, Q * T), re-derived from the words and cross-checked.
std::pair<IntMatrix, IntMatrix> derive_vu(const LinPresentation& lp);

/// Exponent-sum matrix of `words` over generators 1..gens: row i, column j
/// holds the exponent sum of generator j+1 in words[i].
IntMatrix exponent_matrix(const std::vector<Word>& words, int gens);

/// <x_1..x_{2g}, mu | mu alpha_i mu^-1 beta_i^-1>. Meridian is the last
/// generator.
Presentation knot_group(const LinPresentation& lp);

/// Presentation of the n-fold cyclic cover: generators x{i}_{j}
/// (0 <= j < n) plus the covering meridian, relators
///   alpha_i^(j) = beta_i^(j+1)          for 0 <= j <= n-2,
///   mu_n alpha_i^(n-1) mu_n^-1 = beta_i^(0),
/// where superscript (j) replaces x_k by its j-th lift. The lift index runs
/// against the meridian so that the relators abelianize to
/// block_circulant(V, U, n) row by row.
Presentation lift_cn(const LinPresentation& lp, int n);

/// Same with the covering meridian deleted:
///   alpha_i^(j) = beta_i^(j+1 mod n)    for 0 <= j <= n-1.
Presentation lift_sigman(const LinPresentation& lp, int n);

/// Generator index (0-based) of the j-th lift of x_i (1-based i) inside a
/// lift presentation.
int lift_generator_index(const LiftInfo& info, int i, int j);

/// Covering-transformation action on words over a lift presentation:
/// x{i}_{j} -> x{i}_{j+1 mod n}, the covering meridian is fixed.
Word tau_action(const Presentation& p, const Word& w);

/// Exponent sum of the meridian class: sum of letter signs times generator
/// weights.
long abelianization_exponent(const Presentation& p, const Word& w);

/// Rows = relators, columns = generators; entry (r, c) is the exponent sum
/// of generator c+1 in relator r.
IntMatrix abelianized_relator_matrix(const Presentation& p);

/// Word <-> string, letters like "x1 x2^-1 mu" separated by spaces.
Word parse_word(const std::string& text, const std::vector<std::string>& labels);
std::string word_to_string(const Word& w, const std::vector<std::string>& labels);

}  // namespace charslice::presentation

#endif
