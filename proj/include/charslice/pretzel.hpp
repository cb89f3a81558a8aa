#ifndef CHARSLICE_PRETZEL_HPP
#define CHARSLICE_PRETZEL_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "charslice/presentation.hpp"
#include "charslice/reps.hpp"
#include "charslice/sl2.hpp"

namespace charslice::pretzel {

using presentation::Presentation;
using reps::Representation;
using sl2::Complex;
using sl2::Sl2;
using sl2::Word;

/// pi_1 of the two-fold branched cover of a (p, q, r) pretzel knot, in
/// Seifert-fibered form: generators s1, s2, s3, h with relators
/// s1^p h, s2^q h, s3^r h, [s_i, h], s1 s2 s3.
struct BrieskornGroup {
    int p, q, r;
    std::shared_ptr<const Presentation> pres;

    BrieskornGroup(int p, int q, int r);
};

/// Covering-transformation action on words over {s1, s2, s3, h}:
/// s1 -> s1^-1, s2 -> s1 s2^-1 s1^-1, s3 -> s1 s2 s3^-1 s2^-1 s1^-1, h -> h.
/// In the generators t1 = s1, t2 = s1 s2 this is t_i -> t_i^-1.
Word tau2_action(const Word& w);

/// Parameters of one representation: rho(h) = epsilon * 1; m1 picks the
/// eigenvalue a = exp(i pi (2 m1 + [eps=-1]) / p) of rho(t1) (so a^p = eps),
/// m2 and m3 pick the trace targets beta = 2 cos(pi (2 m2 + [eps=-1]) / q)
/// for s2 and gamma likewise for s3.
struct RepParams {
    int epsilon = 1;  // +1 or -1
    int m1 = 0, m2 = 0, m3 = 0;

    Complex eigenvalue_a(int p) const;
    double trace_beta(int q) const;
    double trace_gamma(int r) const;
    /// a != +-1 and beta, gamma != +-2.
    bool admissible(int p, int q, int r) const;
};

/// Builds rho(t1) = diag(a, 1/a) and rho(t2) = (s t; -t v) from the linear
/// system s + v = gamma, s/a + a v = beta, t^2 = 1 - s v (principal branch;
/// the other branch is conjugate by diag(i, -i)). Must verify.
Representation build_rep(const BrieskornGroup& g, const RepParams& params,
                         const reps::Tolerances& tol = {});

/// Confirms rho(tau2(g)) = C rho(g) C^-1 for all generators; for
/// representations in build_rep's normal form the certificate is the
/// quaternion k. Externally supplied representations are first conjugated
/// into that form (diagonalize rho(t1), then the balancing diagonal
/// conjugation), and the certificate is pulled back. Throws Error if no
/// certificate passes.
Sl2 equivariance_certificate(const Representation& rep, const reps::Tolerances& tol = {});

struct SweepRecord {
    RepParams params;
    bool admissible = false;
    std::string skip_reason;  // set when not admissible
    double residual = 0.0;
    bool verified = false;
    bool irreducible = false;
    bool equivariant = false;
    double equivariance_residual = 0.0;
};

struct SurjectivityReport {
    int p, q, r;
    std::vector<SweepRecord> records;
    int admissible_count = 0;
    int verified_count = 0;
    int irreducible_count = 0;
    int equivariant_irreducible_count = 0;
    int distinct_character_count = 0;
    /// every irreducible representation in the sweep got a certificate
    bool all_irreducible_equivariant = false;
};

/// Exhaustive sweep over epsilon and m1, m2, m3; the computational content
/// of the surjectivity statement at desk scale: every irreducible
/// representation constructed is tau_2-equivariant.
SurjectivityReport surjectivity_report(int p, int q, int r,
                                       const reps::Tolerances& tol = {});

std::string report_to_text(const SurjectivityReport& report);

}  // namespace charslice::pretzel

#endif
