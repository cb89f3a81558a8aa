#include "charslice/reps.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace charslice::reps {

using exactlin::Int;
using exactlin::IntMatrix;

Representation::Representation(std::shared_ptr<const Presentation> pres,
                               std::vector<Sl2> assignment, double eps_det)
    : pres_(std::move(pres)), assignment_(std::move(assignment)) {
    if (static_cast<int>(assignment_.size()) != pres_->generator_count())
        throw LookupError("assignment size does not match generator count");
    for (const Sl2& m : assignment_)
        if (!sl2::is_unit_det(m, eps_det))
            throw DataConsistencyError("assigned matrix determinant is not 1 within tolerance");
    double mx = 0.0;
    for (const Word& r : pres_->relators)
        mx = std::max(mx, sl2::frobenius_distance(evaluate(r), sl2::one()));
    residual_ = mx;
}

Sl2 Representation::evaluate(const Word& w) const {
    return sl2::evaluate_word(assignment_, w);
}

VerifyReport verify(const Representation& rep) {
    VerifyReport report;
    for (const Word& r : rep.pres().relators) {
        double res = sl2::frobenius_distance(rep.evaluate(r), sl2::one());
        report.per_relator.push_back(res);
        report.max_residual = std::max(report.max_residual, res);
    }
    return report;
}

CharacterSample character_sample(const Representation& rep) {
    const int n = rep.pres().generator_count();
    CharacterSample s;
    for (int i = 0; i < n; ++i) s.traces.push_back(sl2::trace(rep.value(i)));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            s.traces.push_back(sl2::trace(sl2::mul(rep.value(i), rep.value(j))));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                s.traces.push_back(
                    sl2::trace(sl2::mul(sl2::mul(rep.value(i), rep.value(j)), rep.value(k))));
    return s;
}

double sample_distance(const CharacterSample& a, const CharacterSample& b) {
    if (a.traces.size() != b.traces.size())
        throw DimensionError("character samples over different word sets");
    double mx = 0.0;
    for (size_t i = 0; i < a.traces.size(); ++i)
        mx = std::max(mx, std::abs(a.traces[i] - b.traces[i]));
    return mx;
}

Representation involution_iota(const Representation& rep) {
    std::vector<Sl2> twisted = rep.assignment();
    for (int i = 0; i < rep.pres().generator_count(); ++i)
        if (rep.pres().weights[i] % 2 != 0) twisted[i] = sl2::negate(twisted[i]);
    return Representation(rep.pres_ptr(), std::move(twisted));
}

Complex slice_trace(const Representation& rep) {
    if (!rep.pres().meridian) throw ArgumentError("presentation has no meridian generator");
    return sl2::trace(rep.value(*rep.pres().meridian));
}

bool in_slice(const Representation& rep, Complex c, double tol) {
    return std::abs(slice_trace(rep) - c) <= tol;
}

namespace {

bool is_central(const Sl2& m, double tol) {
    return sl2::frobenius_distance_up_to_sign(m, sl2::one()) <= tol;
}

struct Line {
    Complex v0, v1;  // nonzero vector spanning the line
};

// sin of angle between the line and its image under m
double line_defect(const Line& line, const Sl2& m) {
    Complex w0 = m.a * line.v0 + m.b * line.v1;
    Complex w1 = m.c * line.v0 + m.d * line.v1;
    double nv = std::sqrt(std::norm(line.v0) + std::norm(line.v1));
    double nw = std::sqrt(std::norm(w0) + std::norm(w1));
    if (nw == 0.0) return 1.0;
    return std::abs(line.v0 * w1 - line.v1 * w0) / (nv * nw);
}

std::vector<Line> eigenlines(const Sl2& m) {
    // det = 1: lambda^2 - tr lambda + 1 = 0
    Complex tr = m.trace();
    Complex disc = std::sqrt(tr * tr - 4.0);
    std::vector<Line> lines;
    for (Complex lambda : {(tr + disc) / 2.0, (tr - disc) / 2.0}) {
        // (m - lambda) v = 0
        Complex b = m.b, am = m.a - lambda;
        Complex c = m.c, dm = m.d - lambda;
        Line l;
        if (std::abs(b) + std::abs(am) > std::abs(c) + std::abs(dm))
            l = {b, -am};
        else
            l = {dm, -c};
        double n = std::sqrt(std::norm(l.v0) + std::norm(l.v1));
        if (n < 1e-14) {
            // m is scalar on this eigenvalue; any line works, pick e1
            l = {1.0, 0.0};
            n = 1.0;
        }
        l.v0 /= n;
        l.v1 /= n;
        lines.push_back(l);
    }
    return lines;
}

}  // namespace

bool is_irreducible(const Representation& rep, double tol) {
    std::vector<const Sl2*> noncentral;
    for (const Sl2& m : rep.assignment())
        if (!is_central(m, tol)) noncentral.push_back(&m);
    if (noncentral.empty()) return false;  // abelian (central image)

    // A common invariant line must be an eigenline of the first
    // non-central image.
    for (const Line& cand : eigenlines(*noncentral.front())) {
        bool invariant = true;
        for (const Sl2* m : noncentral)
            if (line_defect(cand, *m) > tol) {
                invariant = false;
                break;
            }
        if (invariant) return false;
    }
    return true;
}

bool is_metabelian(const Representation& rep, double tol) {
    if (!is_irreducible(rep)) return true;
    // the fixed-point criterion compares against the sign twist of the
    // abelianization onto <mu>, which only exists for knot-group-like
    // presentations (meridian of weight 1)
    const Presentation& p = rep.pres();
    if (!p.meridian || p.weights[*p.meridian] != 1)
        throw ArgumentError("metabelian test needs a knot-group representation");
    CharacterSample a = character_sample(rep);
    CharacterSample b = character_sample(involution_iota(rep));
    return sample_distance(a, b) <= tol;
}

Representation abelian_rep(std::shared_ptr<const Presentation> kg, Complex lambda) {
    if (!kg->meridian) throw ArgumentError("abelian representation needs a meridian");
    std::vector<Sl2> assign(kg->generator_count(), sl2::one());
    assign[*kg->meridian] = sl2::diagonal(lambda);
    return Representation(std::move(kg), std::move(assign));
}

namespace {

Rational mod1(const Rational& x) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    Int num = numerator(x), den = denominator(x);  // den > 0 canonical
    Int r = num % den;
    if (r < 0) r += den;
    return Rational(r, den);
}

std::vector<Rational> negate_mod1(const std::vector<Rational>& theta) {
    std::vector<Rational> out;
    out.reserve(theta.size());
    for (const Rational& t : theta) out.push_back(t == 0 ? Rational(0) : mod1(-t));
    return out;
}

}  // namespace

std::vector<DihedralSolution> dihedral_solutions(const IntMatrix& v, const IntMatrix& u) {
    IntMatrix w = v + u;
    Int dw = exactlin::det(w);
    if (dw == 0)
        throw InvalidKnotDataError("det(V+U) = 0: dihedral solution set is not finite");
    exactlin::SmithNormalForm snf = exactlin::smith_normal_form(w);
    const int n = w.rows();

    // W theta = 0 in (Q/Z)^n  <=>  theta = Q psi with psi_i in (1/d_i) Z / Z.
    std::vector<Int> d(n);
    for (int i = 0; i < n; ++i) d[i] = snf.d(i, i);

    std::vector<DihedralSolution> sols;
    std::vector<Int> k(n, 0);
    for (;;) {
        DihedralSolution sol;
        sol.theta.resize(n);
        bool zero = true;
        for (int i = 0; i < n; ++i) {
            Rational acc = 0;
            for (int j = 0; j < n; ++j)
                if (k[j] != 0) acc += Rational(snf.q(i, j) * k[j], d[j]);
            sol.theta[i] = mod1(acc);
            if (sol.theta[i] != 0) zero = false;
        }
        sol.trivial = zero;
        sols.push_back(std::move(sol));

        int pos = n - 1;  // mixed-radix increment, last index fastest
        while (pos >= 0) {
            k[pos] += 1;
            if (k[pos] < d[pos]) break;
            k[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }

    // Pair theta with -theta; the class representative is the
    // lexicographically smaller of the two.
    std::vector<std::vector<Rational>> canon;
    canon.reserve(sols.size());
    for (const auto& s : sols) {
        std::vector<Rational> neg = negate_mod1(s.theta);
        canon.push_back(std::min(s.theta, neg));
    }
    std::vector<std::vector<Rational>> reps = canon;
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    for (size_t i = 0; i < sols.size(); ++i) {
        auto it = std::lower_bound(reps.begin(), reps.end(), canon[i]);
        sols[i].class_id = static_cast<int>(it - reps.begin());
    }
    return sols;
}

DihedralEnumeration enumerate_dihedral(const LinPresentation& lp, const Tolerances& tol) {
    auto [v, u] = derive_vu(lp);
    DihedralEnumeration out;
    out.solutions = dihedral_solutions(v, u);

    int classes = 0;
    for (const auto& s : out.solutions) classes = std::max(classes, s.class_id + 1);
    out.classes.assign(classes, {});
    std::vector<bool> trivial_class(classes, false);
    for (const auto& s : out.solutions) {
        std::vector<Rational> neg = negate_mod1(s.theta);
        out.classes[s.class_id] = std::min(s.theta, neg);
        if (s.trivial) trivial_class[s.class_id] = true;
    }
    for (int c = 0; c < classes; ++c)
        if (!trivial_class[c]) ++out.nontrivial_class_count;

    auto kg = std::make_shared<const Presentation>(knot_group(lp));
    const int g2 = 2 * lp.genus;
    for (int c = 0; c < classes; ++c) {
        std::vector<Sl2> assign;
        assign.reserve(g2 + 1);
        for (int i = 0; i < g2; ++i) {
            double angle = 2.0 * std::numbers::pi *
                           static_cast<double>(out.classes[c][i].convert_to<double>());
            assign.push_back(sl2::diagonal(std::polar(1.0, angle)));
        }
        assign.push_back(sl2::quat_j());
        Representation rep(kg, std::move(assign), tol.eps_det);
        if (!rep.verified(tol.eps_rel))
            throw InternalConsistencyError(
                "dihedral parameter solution fails relator verification");
        out.representatives.push_back(std::move(rep));
    }
    return out;
}

Representation phi_n(const LinPresentation& lp, const Representation& rep, int n,
                     std::optional<int> k, const Tolerances& tol) {
    if (n < 2) throw ArgumentError("cover degree must be >= 2");
    const int g2 = 2 * lp.genus;
    if (rep.pres().generator_count() != g2 + 1 || !rep.pres().meridian)
        throw ArgumentError("representation is not over the knot group of this Lin data");

    const Sl2& mu = rep.value(*rep.pres().meridian);
    Complex tr = sl2::trace(mu);
    if (!k) {
        int best = 0;
        double bestd = std::abs(tr - 2.0);
        for (int cand = 1; cand <= n; ++cand) {
            double d = std::abs(tr - 2.0 * std::cos(cand * std::numbers::pi / n));
            if (d < bestd) { bestd = d; best = cand; }
        }
        k = best;
    }
    if (*k < 0 || *k > n) throw ArgumentError("k must lie in 0..n");
    double slice_value = 2.0 * std::cos(*k * std::numbers::pi / n);
    if (std::abs(tr - slice_value) > 1e-6)
        throw SliceMismatchError("tr rho(mu) is not 2 cos(k pi / n)");
    Sl2 mu_n = sl2::power(mu, n);
    Sl2 target = (*k % 2 == 0) ? sl2::one() : sl2::negate(sl2::one());
    if (sl2::frobenius_distance(mu_n, target) > tol.eps_rel)
        throw SliceMismatchError("rho(mu)^n != (-1)^k within tolerance");

    auto lifted = std::make_shared<const Presentation>(lift_sigman(lp, n));
    std::vector<Sl2> assign(static_cast<size_t>(g2) * n);
    Sl2 conj = sl2::one();       // rho(mu)^{-j}
    Sl2 conj_inv = sl2::one();   // rho(mu)^{j}
    for (int j = 0; j < n; ++j) {
        for (int i = 1; i <= g2; ++i) {
            int idx = presentation::lift_generator_index(*lifted->lift, i, j);
            assign[idx] = sl2::mul(sl2::mul(conj, rep.value(i - 1)), conj_inv);
        }
        conj = sl2::mul(conj, sl2::inv(mu));
        conj_inv = sl2::mul(mu, conj_inv);
    }
    Representation out(lifted, std::move(assign), tol.eps_det);
    if (out.relation_residual() > 10.0 * tol.eps_rel)
        throw InternalConsistencyError("lifted representation fails cover relators");
    return out;
}

std::optional<Sl2> tau_equivariance(const Representation& rep, const Tolerances& tol) {
    const Presentation& p = rep.pres();
    if (!p.lift) throw ArgumentError("tau equivariance needs a lift presentation");
    const int gens = p.generator_count();

    // rho(tau(g)) C - C rho(g) = 0 is linear in C: stack one 4x4 block per
    // generator acting on vec(C) (column-major).
    Eigen::MatrixXcd sys(4 * gens, 4);
    for (int g = 0; g < gens; ++g) {
        Sl2 lhs = rep.evaluate(presentation::tau_action(p, Word::generator(g + 1)));
        const Sl2& rhs = rep.value(g);
        Eigen::Matrix2cd l, r;
        l << lhs.a, lhs.b, lhs.c, lhs.d;
        r << rhs.a, rhs.b, rhs.c, rhs.d;
        Eigen::Matrix4cd block = Eigen::Matrix4cd::Zero();
        block.block<2, 2>(0, 0) = l;
        block.block<2, 2>(2, 2) = l;
        // subtract r^T (x) I
        for (int bi = 0; bi < 2; ++bi)
            for (int bj = 0; bj < 2; ++bj) {
                block(2 * bi, 2 * bj) -= r(bj, bi);
                block(2 * bi + 1, 2 * bj + 1) -= r(bj, bi);
            }
        sys.block<4, 4>(4 * g, 0) = block;
    }

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(sys, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    double smax = sv.size() > 0 ? sv(0) : 0.0;
    double null_tol = std::max(1e-8, 1e-10 * smax);
    std::vector<Eigen::Vector4cd> null_basis;
    for (int i = 0; i < 4; ++i)
        if (sv(i) <= null_tol) null_basis.push_back(svd.matrixV().col(i));
    if (null_basis.empty()) return std::nullopt;

    // det is a quadratic form on the null space; probe basis vectors and
    // pairwise sums to find an invertible element if one exists.
    auto to_matrix = [](const Eigen::Vector4cd& v) {
        return Sl2{v(0), v(2), v(1), v(3)};
    };
    std::vector<Eigen::Vector4cd> candidates = null_basis;
    for (size_t i = 0; i < null_basis.size(); ++i)
        for (size_t j = i + 1; j < null_basis.size(); ++j) {
            candidates.push_back(null_basis[i] + null_basis[j]);
            candidates.push_back(null_basis[i] - null_basis[j]);
        }
    Sl2 best;
    double best_det = -1.0;
    for (const auto& cand : candidates) {
        Sl2 c = to_matrix(cand);
        double dt = std::abs(c.det());
        if (dt > best_det) { best_det = dt; best = c; }
    }
    if (best_det < 1e-6) return std::nullopt;

    Complex root = std::sqrt(best.det());
    Sl2 c = sl2::scale(1.0 / root, best);
    double residual = 0.0;
    Sl2 c_inv = sl2::inv(c);
    for (int g = 0; g < gens; ++g) {
        Sl2 lhs = rep.evaluate(presentation::tau_action(p, Word::generator(g + 1)));
        Sl2 conj = sl2::mul(sl2::mul(c, rep.value(g)), c_inv);
        residual = std::max(residual, sl2::frobenius_distance(lhs, conj));
    }
    if (residual > tol.eps_rel) return std::nullopt;
    return c;
}

}  // namespace charslice::reps
