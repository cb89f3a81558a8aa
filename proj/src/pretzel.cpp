#include "charslice/pretzel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace charslice::pretzel {

namespace {

constexpr int kS1 = 1, kS2 = 2, kS3 = 3, kH = 4;

Word gen(int i) { return Word::generator(i); }

}  // namespace

BrieskornGroup::BrieskornGroup(int p_, int q_, int r_) : p(p_), q(q_), r(r_) {
    if (p < 2 || q < 2 || r < 2) throw ArgumentError("pretzel parameters must be >= 2");
    if (std::gcd(p, q) != 1 || std::gcd(q, r) != 1 || std::gcd(p, r) != 1)
        throw ArgumentError("pretzel parameters must be pairwise coprime");

    Presentation pr;
    pr.labels = {"s1", "s2", "s3", "h"};
    pr.weights = {0, 0, 0, 0};
    Word h = gen(kH);
    pr.relators.push_back(gen(kS1).pow(p) * h);
    pr.relators.push_back(gen(kS2).pow(q) * h);
    pr.relators.push_back(gen(kS3).pow(r) * h);
    for (int i = kS1; i <= kS3; ++i)
        pr.relators.push_back(gen(i) * h * gen(i).inverse() * h.inverse());
    pr.relators.push_back(gen(kS1) * gen(kS2) * gen(kS3));
    pres = std::make_shared<const Presentation>(std::move(pr));
}

Word tau2_action(const Word& w) {
    const Word s1 = gen(kS1), s2 = gen(kS2), s3 = gen(kS3);
    const Word images[4] = {
        s1.inverse(),
        s1 * s2.inverse() * s1.inverse(),
        s1 * s2 * s3.inverse() * s2.inverse() * s1.inverse(),
        gen(kH),
    };
    Word out;
    for (int x : w.letters()) {
        int idx = std::abs(x);
        if (idx < kS1 || idx > kH) throw LookupError("word is not over {s1, s2, s3, h}");
        const Word& img = images[idx - 1];
        out = out * (x > 0 ? img : img.inverse());
    }
    return out;
}

Complex RepParams::eigenvalue_a(int p) const {
    int delta = epsilon == -1 ? 1 : 0;
    return std::polar(1.0, std::numbers::pi * (2 * m1 + delta) / p);
}

double RepParams::trace_beta(int q) const {
    int delta = epsilon == -1 ? 1 : 0;
    return 2.0 * std::cos(std::numbers::pi * (2 * m2 + delta) / q);
}

double RepParams::trace_gamma(int r) const {
    int delta = epsilon == -1 ? 1 : 0;
    return 2.0 * std::cos(std::numbers::pi * (2 * m3 + delta) / r);
}

bool RepParams::admissible(int p, int q, int r) const {
    int delta = epsilon == -1 ? 1 : 0;
    if ((2 * m1 + delta) % p == 0) return false;  // a = +-1
    if ((2 * m2 + delta) % q == 0) return false;  // beta = +-2
    if ((2 * m3 + delta) % r == 0) return false;  // gamma = +-2
    return true;
}

Representation build_rep(const BrieskornGroup& g, const RepParams& params,
                         const reps::Tolerances& tol) {
    if (params.epsilon != 1 && params.epsilon != -1)
        throw ArgumentError("epsilon must be +-1");
    Complex a = params.eigenvalue_a(g.p);
    if (std::abs(a - 1.0 / a) < 1e-12)
        throw ArgumentError("a = +-1 makes the trace system singular");
    double beta = params.trace_beta(g.q);
    double gamma = params.trace_gamma(g.r);

    // tr rho(t2) = tr rho(s3)^-1 = gamma, tr rho(t1^-1 t2) = tr rho(s2) = beta:
    //   s + v = gamma, s/a + a v = beta
    Complex v = (Complex(beta) - gamma / a) / (a - 1.0 / a);
    Complex s = Complex(gamma) - v;
    Complex t = std::sqrt(1.0 - s * v);

    Sl2 t1 = sl2::diagonal(a);
    Sl2 t2{s, t, -t, v};
    Sl2 h = params.epsilon == 1 ? sl2::one() : sl2::negate(sl2::one());
    std::vector<Sl2> assign = {
        t1,                           // s1
        sl2::mul(sl2::inv(t1), t2),   // s2 = t1^-1 t2
        sl2::inv(t2),                 // s3 = t2^-1
        h,
    };
    Representation rep(g.pres, std::move(assign), tol.eps_det);
    if (!rep.verified(tol.eps_rel))
        throw ParameterAdmissibilityError("parameter tuple fails relator verification");
    return rep;
}

namespace {

double certificate_residual(const Representation& rep, const Sl2& cand) {
    Sl2 inv = sl2::inv(cand);
    double residual = 0.0;
    for (int i = 0; i < rep.pres().generator_count(); ++i) {
        Sl2 lhs = rep.evaluate(tau2_action(gen(i + 1)));
        Sl2 rhs = sl2::mul(sl2::mul(cand, rep.value(i)), inv);
        residual = std::max(residual, sl2::frobenius_distance(lhs, rhs));
    }
    return residual;
}

}  // namespace

Sl2 equivariance_certificate(const Representation& rep, const reps::Tolerances& tol) {
    // central images are fixed by tau; normal-form representations take the
    // quaternion k directly
    if (certificate_residual(rep, sl2::one()) <= tol.eps_rel) return sl2::one();
    if (certificate_residual(rep, sl2::quat_k()) <= tol.eps_rel) return sl2::quat_k();

    // Conjugate into the normal form: diagonalize rho(t1) = rho(s1), then
    // balance the off-diagonal entries of rho(t2) by diag(g, 1/g) with
    // g^2 = sqrt(-u/t); the certificate pulls back through the conjugation.
    const Sl2& s1 = rep.value(0);
    Complex tr = sl2::trace(s1);
    Complex disc = std::sqrt(tr * tr - 4.0);
    if (std::abs(disc) < 1e-9)
        throw Error("rho(s1) is not diagonalizable; no certificate found");
    Complex lam = (tr + disc) / 2.0;
    auto eigvec = [&](Complex lambda) -> std::pair<Complex, Complex> {
        if (std::abs(s1.b) + std::abs(s1.a - lambda) > std::abs(s1.c) + std::abs(s1.d - lambda))
            return {s1.b, lambda - s1.a};
        return {lambda - s1.d, s1.c};
    };
    auto [p0, p1] = eigvec(lam);
    auto [q0, q1] = eigvec(1.0 / lam);
    Sl2 basis{p0, q0, p1, q1};
    Complex det = basis.det();
    Complex scale = std::sqrt(det);
    basis = sl2::scale(1.0 / scale, basis);

    Sl2 conj = sl2::inv(basis);
    Sl2 t2 = sl2::mul(sl2::mul(conj, sl2::mul(rep.value(0), rep.value(1))), basis);
    Sl2 total = basis;
    if (std::abs(t2.b) > 1e-12 && std::abs(t2.c) > 1e-12) {
        // conjugating by diag(g, 1/g) sends (s, t; u, v) to (s, t/g^2; u g^2, v)
        Complex g2 = std::sqrt(-t2.b / t2.c);
        Complex g = std::sqrt(g2);
        total = sl2::mul(basis, sl2::diagonal(g));
    }
    Sl2 cand = sl2::mul(sl2::mul(total, sl2::quat_k()), sl2::inv(total));
    double res = certificate_residual(rep, cand);
    if (res <= tol.eps_rel) return cand;
    throw Error("no tau_2 certificate passed; residual " + std::to_string(res));
}

SurjectivityReport surjectivity_report(int p, int q, int r, const reps::Tolerances& tol) {
    BrieskornGroup group(p, q, r);
    SurjectivityReport report;
    report.p = p;
    report.q = q;
    report.r = r;

    std::vector<reps::CharacterSample> samples;
    for (int eps : {1, -1}) {
        for (int m1 = 0; m1 < p; ++m1)
            for (int m2 = 0; m2 < q; ++m2)
                for (int m3 = 0; m3 < r; ++m3) {
                    SweepRecord rec;
                    rec.params = {eps, m1, m2, m3};
                    if (!rec.params.admissible(p, q, r)) {
                        rec.skip_reason = "reducible/degenerate guard";
                        report.records.push_back(rec);
                        continue;
                    }
                    rec.admissible = true;
                    ++report.admissible_count;

                    std::optional<Representation> built;
                    try {
                        built = build_rep(group, rec.params, tol);
                    } catch (const ParameterAdmissibilityError& e) {
                        rec.skip_reason = e.what();
                        report.records.push_back(rec);
                        continue;
                    }
                    const Representation& rep = *built;
                    rec.residual = rep.relation_residual();
                    rec.verified = true;
                    ++report.verified_count;
                    rec.irreducible = reps::is_irreducible(rep, tol.eps_line);
                    if (rec.irreducible) ++report.irreducible_count;
                    try {
                        Sl2 cert = equivariance_certificate(rep, tol);
                        rec.equivariant = true;
                        rec.equivariance_residual = certificate_residual(rep, cert);
                    } catch (const Error&) {
                        rec.equivariant = false;
                    }
                    if (rec.irreducible && rec.equivariant)
                        ++report.equivariant_irreducible_count;

                    reps::CharacterSample s = reps::character_sample(rep);
                    bool fresh = true;
                    for (const auto& seen : samples)
                        if (reps::sample_distance(seen, s) <= 1e-6) {
                            fresh = false;
                            break;
                        }
                    if (fresh) samples.push_back(std::move(s));
                    report.records.push_back(rec);
                }
    }
    report.distinct_character_count = static_cast<int>(samples.size());
    report.all_irreducible_equivariant =
        report.irreducible_count == report.equivariant_irreducible_count;
    return report;
}

std::string report_to_text(const SurjectivityReport& r) {
    std::ostringstream os;
    os << "pretzel (" << r.p << "," << r.q << "," << r.r << ") two-fold branched cover sweep\n";
    os << "  parameter tuples:          " << r.records.size() << "\n";
    os << "  admissible:                " << r.admissible_count << "\n";
    os << "  verified:                  " << r.verified_count << "\n";
    os << "  irreducible:               " << r.irreducible_count << "\n";
    os << "  irreducible + equivariant: " << r.equivariant_irreducible_count << "\n";
    os << "  distinct characters:       " << r.distinct_character_count << "\n";
    os << "  all irreducible reps tau_2-equivariant: "
       << (r.all_irreducible_equivariant ? "yes" : "NO") << "\n";
    return os.str();
}

}  // namespace charslice::pretzel
