#ifndef CHARSLICE_REPS_HPP
#define CHARSLICE_REPS_HPP

#include <memory>
#include <optional>
#include <vector>

#include "charslice/presentation.hpp"
#include "charslice/sl2.hpp"

namespace charslice::reps {

using exactlin::Rational;
using presentation::LinPresentation;
using presentation::Presentation;
using sl2::Complex;
using sl2::Sl2;
using sl2::Word;

/// Default tolerances. eps_rel bounds relator residuals of verified
/// representations, eps_det the determinant defect of admitted matrices,
/// eps_line the angular tolerance of the invariant-line test and eps_sample
/// the trace distance under which two character samples are considered equal.
struct Tolerances {
    double eps_rel = sl2::kEpsRel;
    double eps_det = sl2::kEpsDet;
    double eps_line = 1e-6;
    double eps_sample = 1e-8;
};

struct VerifyReport {
    std::vector<double> per_relator;  // Frobenius residual of each relator
    double max_residual = 0.0;
};

/// Assignment generator -> SL2 over a fixed presentation, with the relator
/// residual computed at construction. Immutable after construction.
class Representation {
public:
    Representation(std::shared_ptr<const Presentation> pres, std::vector<Sl2> assignment,
                   double eps_det = sl2::kEpsDet);

    const Presentation& pres() const { return *pres_; }
    std::shared_ptr<const Presentation> pres_ptr() const { return pres_; }
    const std::vector<Sl2>& assignment() const { return assignment_; }
    const Sl2& value(int generator) const { return assignment_[generator]; }  // 0-based

    double relation_residual() const { return residual_; }
    bool verified(double eps_rel = sl2::kEpsRel) const { return residual_ <= eps_rel; }

    Sl2 evaluate(const Word& w) const;

private:
    std::shared_ptr<const Presentation> pres_;
    std::vector<Sl2> assignment_;
    double residual_;
};

VerifyReport verify(const Representation& rep);

/// Traces over the deterministic word set: generators g_i, pairs g_i g_j
/// (i < j), triples g_i g_j g_k (i < j < k). SL2 characters of finitely
/// generated groups are determined by traces of products of length <= 3.
struct CharacterSample {
    std::vector<Complex> traces;
};

CharacterSample character_sample(const Representation& rep);
double sample_distance(const CharacterSample& a, const CharacterSample& b);

/// Twist by the sign character of the abelianization: each generator value
/// is multiplied by (-1)^weight. An involution; on Lin generators it fixes
/// the x_i and negates mu.
Representation involution_iota(const Representation& rep);

Complex slice_trace(const Representation& rep);
bool in_slice(const Representation& rep, Complex c, double tol);

/// True iff the generator images admit no common invariant line (within the
/// angular tolerance). All-central images count as reducible.
bool is_irreducible(const Representation& rep, double tol = 1e-6);

/// Reducible representations are metabelian; an irreducible one is
/// metabelian iff its character sample equals that of iota(rep).
bool is_metabelian(const Representation& rep, double tol = 1e-8);

/// The abelian representation phi_lambda: mu -> diag(lambda, 1/lambda),
/// x_i -> 1.
Representation abelian_rep(std::shared_ptr<const Presentation> knot_group, Complex lambda);

/// One binary dihedral parameter vector: theta in (Q/Z)^{2g} with
/// (V+U) theta integral. class_id pairs theta with -theta.
struct DihedralSolution {
    std::vector<Rational> theta;
    int class_id = 0;
    bool trivial = false;
};

struct DihedralEnumeration {
    std::vector<DihedralSolution> solutions;       // all |det(V+U)| of them
    std::vector<std::vector<Rational>> classes;    // canonical representative per class
    std::vector<Representation> representatives;   // one per class, same order
    int nontrivial_class_count = 0;
};

/// All solutions of (V+U) theta = 0 in (Q/Z)^{2g} via the Smith form,
/// exactly; plus the binary dihedral representations
/// x_i -> diag(e^{2 pi i theta_i}, e^{-2 pi i theta_i}), mu -> j built over
/// knot_group(lp). Throws InvalidKnotDataError when det(V+U) = 0.
DihedralEnumeration enumerate_dihedral(const LinPresentation& lp,
                                       const Tolerances& tol = {});

/// Solution part only, from the matrices.
std::vector<DihedralSolution> dihedral_solutions(const exactlin::IntMatrix& v,
                                                 const exactlin::IntMatrix& u);

/// The lifting map: sends a knot-group representation with
/// tr rho(mu) = 2 cos(k pi / n) and rho(mu)^n = (-1)^k to a representation
/// of the n-fold branched cover, by x{i}_{j} -> rho(mu^-j x_i mu^j).
/// When k is not supplied it is inferred from tr rho(mu); both
/// preconditions are checked regardless.
Representation phi_n(const LinPresentation& lp, const Representation& rep, int n,
                     std::optional<int> k = std::nullopt, const Tolerances& tol = {});

/// Solves rho(tau(g)) C = C rho(g) over all generators for C in SL2.
/// Returns C with det C = 1 when an invertible solution exists within
/// eps_rel, otherwise nullopt (the representation is not tau-equivariant).
std::optional<Sl2> tau_equivariance(const Representation& rep, const Tolerances& tol = {});

}  // namespace charslice::reps

#endif
