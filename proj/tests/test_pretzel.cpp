#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "charslice/pretzel.hpp"

using namespace charslice;
using pretzel::BrieskornGroup;
using pretzel::RepParams;
using reps::Representation;
using sl2::Complex;
using sl2::Sl2;
using sl2::Word;

TEST_CASE("brieskorn group presentation") {
    BrieskornGroup g(2, 3, 7);
    CHECK(g.pres->generator_count() == 4);
    CHECK(g.pres->relators.size() == 7);
    CHECK(g.pres->labels == std::vector<std::string>{"s1", "s2", "s3", "h"});
    // s1^2 h and s1 s2 s3
    CHECK(g.pres->relators[0] == Word({1, 1, 4}));
    CHECK(g.pres->relators[6] == Word({1, 2, 3}));

    CHECK_THROWS_AS(BrieskornGroup(1, 3, 7), ArgumentError);
    CHECK_THROWS_AS(BrieskornGroup(3, 3, 7), ArgumentError);
    CHECK_THROWS_AS(BrieskornGroup(2, 4, 7), ArgumentError);
}

TEST_CASE("tau2 action on the singular fiber generators") {
    CHECK(pretzel::tau2_action(Word({1})) == Word({-1}));
    CHECK(pretzel::tau2_action(Word({2})) == Word({1, -2, -1}));
    CHECK(pretzel::tau2_action(Word({3})) == Word({1, 2, -3, -2, -1}));
    CHECK(pretzel::tau2_action(Word({4})) == Word({4}));
    CHECK_THROWS_AS(pretzel::tau2_action(Word({5})), LookupError);

    // involution at the word level
    std::mt19937 rng(1);
    std::uniform_int_distribution<int> letter(1, 4);
    std::uniform_int_distribution<int> sign(0, 1);
    for (int iter = 0; iter < 30; ++iter) {
        std::vector<int> letters;
        for (int i = 0; i < 10; ++i) letters.push_back(letter(rng) * (sign(rng) ? 1 : -1));
        Word w(letters);
        CHECK(pretzel::tau2_action(pretzel::tau2_action(w)) == w);
    }

    // t2 = s1 s2 maps to t2^-1
    Word t2({1, 2});
    CHECK(pretzel::tau2_action(t2) == t2.inverse());
}

TEST_CASE("build_rep constructs verified representations with pinned traces") {
    BrieskornGroup g(2, 3, 7);
    RepParams params{-1, 0, 0, 0};
    REQUIRE(params.admissible(2, 3, 7));
    Representation rep = pretzel::build_rep(g, params);
    CHECK(rep.relation_residual() <= 1e-10);

    // trace targets hit exactly by construction
    CHECK(std::abs(sl2::trace(rep.value(0)) - Complex(2.0 * std::cos(std::numbers::pi / 2.0))) <
          1e-12);
    CHECK(std::abs(sl2::trace(rep.value(1)) - Complex(params.trace_beta(3))) < 1e-12);
    CHECK(std::abs(sl2::trace(rep.value(2)) - Complex(params.trace_gamma(7))) < 1e-12);

    // rho(s1)^p = eps^-1, rho(s2)^q = eps^-1, rho(s3)^r = eps^-1
    Sl2 target = params.epsilon == 1 ? sl2::one() : sl2::negate(sl2::one());
    CHECK(sl2::frobenius_distance(sl2::power(rep.value(0), 2), target) < 1e-10);
    CHECK(sl2::frobenius_distance(sl2::power(rep.value(1), 3), target) < 1e-10);
    CHECK(sl2::frobenius_distance(sl2::power(rep.value(2), 7), target) < 1e-10);

    // h is central
    for (int i = 0; i < 3; ++i) {
        Sl2 hc = sl2::mul(rep.value(i), rep.value(3));
        Sl2 ch = sl2::mul(rep.value(3), rep.value(i));
        CHECK(sl2::frobenius_distance(hc, ch) < 1e-14);
    }
}

TEST_CASE("the k quaternion certifies build_rep outputs") {
    BrieskornGroup g(3, 5, 7);
    RepParams params{1, 1, 1, 1};
    REQUIRE(params.admissible(3, 5, 7));
    Representation rep = pretzel::build_rep(g, params);
    CHECK(reps::is_irreducible(rep));

    Sl2 cert = pretzel::equivariance_certificate(rep);
    CHECK(sl2::frobenius_distance_up_to_sign(cert, sl2::quat_k()) < 1e-9);
}

TEST_CASE("certificates survive conjugation") {
    BrieskornGroup g(2, 3, 7);
    RepParams params{-1, 0, 2, 2};
    REQUIRE(params.admissible(2, 3, 7));
    Representation rep = pretzel::build_rep(g, params);

    std::mt19937 rng(5150);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int iter = 0; iter < 5; ++iter) {
        Sl2 p{{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}};
        Complex det = p.det();
        if (std::abs(det) < 1e-2) continue;
        p = sl2::scale(1.0 / std::sqrt(det), p);
        Sl2 pinv = sl2::inv(p);
        std::vector<Sl2> conj;
        for (const Sl2& m : rep.assignment()) conj.push_back(sl2::mul(sl2::mul(p, m), pinv));
        Representation crep(rep.pres_ptr(), conj, 1e-6);
        reps::Tolerances tol;
        tol.eps_rel = 1e-6;  // conjugation amplifies rounding a little
        Sl2 cert = pretzel::equivariance_certificate(crep, tol);
        // the pulled-back certificate is P k P^-1 up to sign
        Sl2 expect = sl2::mul(sl2::mul(p, sl2::quat_k()), pinv);
        CHECK(sl2::frobenius_distance_up_to_sign(cert, expect) < 1e-6);
    }
}

TEST_CASE("central representations take the identity certificate") {
    BrieskornGroup g(2, 3, 7);
    std::vector<Sl2> assign(4, sl2::one());
    Representation rep(g.pres, assign);
    CHECK(rep.relation_residual() == 0.0);
    Sl2 cert = pretzel::equivariance_certificate(rep);
    CHECK(sl2::frobenius_distance(cert, sl2::one()) < 1e-12);
}

TEST_CASE("build_rep rejects a singular trace system") {
    BrieskornGroup g(3, 5, 7);
    // eps = +1, m1 = 0 gives a = 1: the linear system for (s, v) degenerates
    RepParams params{1, 0, 1, 1};
    CHECK(!params.admissible(3, 5, 7));
    CHECK_THROWS_AS(pretzel::build_rep(g, params), ArgumentError);
}

TEST_CASE("surjectivity sweep for (2,3,7)") {
    auto report = pretzel::surjectivity_report(2, 3, 7);
    CHECK(report.records.size() == 2 * 2 * 3 * 7);
    CHECK(report.admissible_count == 24);
    CHECK(report.verified_count == 24);
    CHECK(report.irreducible_count > 0);
    CHECK(report.all_irreducible_equivariant);
    // classical count of irreducible characters: (p-1)(q-1)(r-1)/4
    CHECK(report.distinct_character_count == 3);
    for (const auto& rec : report.records) {
        if (!rec.admissible) continue;
        CHECK(rec.verified);
        CHECK(rec.residual <= 1e-8);
        if (rec.irreducible) {
            CHECK(rec.equivariant);
            CHECK(rec.equivariance_residual <= 1e-9);
        }
    }
}

TEST_CASE("surjectivity sweep for (3,5,7)") {
    auto report = pretzel::surjectivity_report(3, 5, 7);
    CHECK(report.admissible_count == 96);
    CHECK(report.verified_count == 96);
    CHECK(report.all_irreducible_equivariant);
    // (p-1)(q-1)(r-1)/4 = 12: sign flips merge the parameter lattice 8:1
    CHECK(report.distinct_character_count == 12);

    // (m2, m3) -> (q - m2, r - m3) gives the complex-conjugate trace targets
    // for eps = +1; spot-check that such pairs share a character
    auto find = [&](const RepParams& p) -> const pretzel::SweepRecord* {
        for (const auto& rec : report.records)
            if (rec.params.epsilon == p.epsilon && rec.params.m1 == p.m1 &&
                rec.params.m2 == p.m2 && rec.params.m3 == p.m3)
                return &rec;
        return nullptr;
    };
    BrieskornGroup g(3, 5, 7);
    RepParams a{1, 1, 1, 1}, b{1, 2, 4, 6};
    REQUIRE(find(a));
    REQUIRE(find(b));
    auto sa = reps::character_sample(pretzel::build_rep(g, a));
    auto sb = reps::character_sample(pretzel::build_rep(g, b));
    CHECK(reps::sample_distance(sa, sb) < 1e-9);
}

TEST_CASE("report text is deterministic") {
    auto r1 = pretzel::report_to_text(pretzel::surjectivity_report(2, 3, 5));
    auto r2 = pretzel::report_to_text(pretzel::surjectivity_report(2, 3, 5));
    CHECK(r1 == r2);
    CHECK(r1.find("(2,3,5)") != std::string::npos);
}
