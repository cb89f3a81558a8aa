#include <doctest.h>

#include <cmath>
#include <numbers>

#include "charslice/twobridge.hpp"

using namespace charslice;
using twobridge::GaussianInt;
using twobridge::GaussianPoly;
using sl2::Complex;
using sl2::Sl2;
using sl2::Word;

namespace {

Word word_of(const std::string& name) {
    auto entry = twobridge::registry_lookup(name);
    REQUIRE(entry.has_value());
    return twobridge::registry_word(*entry);
}

}  // namespace

TEST_CASE("gaussian polynomial arithmetic") {
    GaussianPoly u = GaussianPoly::variable();
    GaussianPoly p = u * u - GaussianPoly::constant(GaussianInt(0, 2));  // u^2 - 2i
    CHECK(p.degree() == 2);
    CHECK(p.coefficient(0) == GaussianInt(0, -2));
    CHECK((p - p).is_zero());
    CHECK(!p.is_real());
    CHECK((u * u).is_real());
    CHECK(p.to_string() == "u^2 - 2i");
    Complex val = p.evaluate({1.0, 1.0});
    CHECK(std::abs(val - Complex(0.0, 0.0)) < 1e-14);  // (1+i)^2 = 2i
}

TEST_CASE("riley assignment matrices at t = -1") {
    auto x = twobridge::riley_x_minus1();
    CHECK(x.a.coefficient(0) == GaussianInt(0, 1));
    CHECK(x.b.coefficient(0) == GaussianInt(0, -1));
    // trace 0 and determinant 1, symbolically
    CHECK((x.a + x.d).is_zero());
    CHECK((x.a * x.d - x.b * x.c) == GaussianPoly::constant(GaussianInt(1)));

    auto y = twobridge::riley_y_minus1();
    CHECK((y.a + y.d).is_zero());
    CHECK((y.a * y.d - y.b * y.c) == GaussianPoly::constant(GaussianInt(1)));
    // lower-left is -i u: at the trefoil root u = -3 it becomes 3i
    CHECK(y.c.coefficient(1) == GaussianInt(0, -1));
    Complex c_at_root = y.c.evaluate({-3.0, 0.0});
    CHECK(std::abs(c_at_root - Complex(0.0, 3.0)) < 1e-14);

    // numeric counterparts
    Sl2 ym = twobridge::riley_y_matrix({-3.0, 0.0});
    CHECK(std::abs(ym.c - Complex(0.0, 3.0)) < 1e-15);
    CHECK(std::abs(ym.det() - Complex(1.0)) < 1e-15);
}

TEST_CASE("riley polynomial of the trefoil is u + 3") {
    GaussianPoly phi = twobridge::riley_polynomial_minus1(word_of("3_1"));
    CHECK(phi.degree() == 1);
    CHECK(phi.is_real());
    CHECK(phi.coefficient(0) == GaussianInt(3));
    CHECK(phi.coefficient(1) == GaussianInt(1));
    CHECK(phi.to_string() == "u + 3");
}

TEST_CASE("derived determinants match the knot tables") {
    CHECK(twobridge::make_two_bridge(word_of("3_1"), 3).p == 3);
    CHECK(twobridge::make_two_bridge(word_of("4_1"), 5).p == 5);
    CHECK(twobridge::make_two_bridge(word_of("5_1"), 5).p == 5);
    CHECK(twobridge::make_two_bridge(word_of("5_2"), 7).p == 7);
    CHECK(twobridge::make_two_bridge(word_of("6_1"), 9).p == 9);
    CHECK(twobridge::make_two_bridge(word_of("6_2"), 11).p == 11);
    CHECK_THROWS_AS(twobridge::make_two_bridge(word_of("3_1"), 5), DataConsistencyError);
}

TEST_CASE("degenerate words are rejected") {
    CHECK_THROWS_AS(twobridge::riley_defect(Word()), DegenerateWordError);
    // w = x conjugates x to x, never to y: defect is nonzero, fine;
    // w = empty is the degenerate case covered above
}

TEST_CASE("closed-form roots") {
    auto r3 = twobridge::closed_form_roots(3);
    REQUIRE(r3.size() == 1);
    CHECK(std::abs(r3[0] + 3.0) < 1e-14);

    auto r5 = twobridge::closed_form_roots(5);
    REQUIRE(r5.size() == 2);
    CHECK(std::abs(r5[0] - (2.0 * std::cos(72.0 / 180.0 * std::numbers::pi) - 2.0)) < 1e-14);
    CHECK(std::abs(r5[0] + 1.3819660112501051) < 1e-12);
    CHECK(std::abs(r5[1] + 3.6180339887498949) < 1e-12);

    for (int p : {3, 5, 7, 9, 11, 25})
        for (double u : twobridge::closed_form_roots(p)) {
            CHECK(u > -4.0);
            CHECK(u < 0.0);
        }

    CHECK_THROWS_AS(twobridge::closed_form_roots(4), ArgumentError);
    CHECK_THROWS_AS(twobridge::closed_form_roots(1), ArgumentError);
}

TEST_CASE("factorization identity for every registry knot") {
    for (const auto& entry : twobridge::knot_registry()) {
        CAPTURE(entry.name);
        Word w = twobridge::registry_word(entry);
        GaussianPoly phi = twobridge::riley_polynomial_minus1(w);
        CHECK(2 * phi.degree() + 1 == entry.p);
        CHECK(phi.is_real());

        // each closed-form root kills all four defect entries
        auto defect = twobridge::riley_defect(w);
        auto roots = twobridge::closed_form_roots(entry.p);
        for (double u : roots) {
            Complex uc(u, 0.0);
            for (const GaussianPoly* e : {&defect.a, &defect.b, &defect.c, &defect.d})
                CHECK(std::abs(e->evaluate(uc)) <= 1e-9);
        }

        // roots are distinct with comfortable gaps
        for (size_t i = 0; i + 1 < roots.size(); ++i)
            CHECK(std::abs(roots[i] - roots[i + 1]) > 1e-6);

        // expanded monic product matches the exact coefficients
        std::vector<double> coeffs = {1.0};
        for (double u : roots) {
            std::vector<double> next(coeffs.size() + 1, 0.0);
            for (size_t i = 0; i < coeffs.size(); ++i) {
                next[i + 1] += coeffs[i];
                next[i] -= u * coeffs[i];
            }
            coeffs = std::move(next);
        }
        REQUIRE(static_cast<int>(coeffs.size()) == phi.degree() + 1);
        for (int k = 0; k <= phi.degree(); ++k) {
            double exact = phi.coefficient(k).re.convert_to<double>();
            CHECK(std::abs(coeffs[k] - exact) <= 1e-6);
        }

        // companion-matrix roots agree with the closed form
        auto numeric = twobridge::polynomial_roots(phi);
        REQUIRE(numeric.size() == roots.size());
        std::vector<double> sorted = roots;
        std::sort(sorted.begin(), sorted.end());
        for (size_t i = 0; i < numeric.size(); ++i) {
            CHECK(std::abs(numeric[i].imag()) < 1e-9);
            CHECK(std::abs(numeric[i].real() - sorted[i]) < 1e-9);
        }
    }
}

TEST_CASE("figure-eight roots match the golden ratio values") {
    GaussianPoly phi = twobridge::riley_polynomial_minus1(word_of("4_1"));
    // u^2 + 5u + 5
    CHECK(phi.coefficient(0) == GaussianInt(5));
    CHECK(phi.coefficient(1) == GaussianInt(5));
    CHECK(phi.coefficient(2) == GaussianInt(1));
    auto roots = twobridge::polynomial_roots(phi);
    REQUIRE(roots.size() == 2);
    CHECK(std::abs(roots[1].real() - (2.0 * std::cos(2.0 * std::numbers::pi / 5) - 2.0)) < 1e-9);
}

TEST_CASE("explicit metabelian representatives") {
    for (const char* name : {"3_1", "4_1", "5_2"}) {
        CAPTURE(name);
        auto entry = twobridge::registry_lookup(name);
        auto knot = twobridge::make_two_bridge(twobridge::registry_word(*entry), entry->p);
        auto list = twobridge::explicit_metabelian_reps(knot);
        CHECK(static_cast<int>(list.size()) == (entry->p - 1) / 2 + 1);

        for (const auto& rep : list) {
            CHECK(rep.verified(1e-8));
            CHECK(reps::is_metabelian(rep));
            CHECK(std::abs(reps::slice_trace(rep)) < 1e-12);
        }
        // all but the last are irreducible; the last is phi_{sqrt(-1)}
        for (size_t k = 0; k + 1 < list.size(); ++k) CHECK(reps::is_irreducible(list[k]));
        CHECK(!reps::is_irreducible(list.back()));

        // distinct k give distinct character samples
        for (size_t a = 0; a < list.size(); ++a)
            for (size_t b = a + 1; b < list.size(); ++b)
                CHECK(reps::sample_distance(reps::character_sample(list[a]),
                                            reps::character_sample(list[b])) > 1e-6);
    }
}

TEST_CASE("gamma order check: rho(x y^-1) has order p") {
    for (const char* name : {"3_1", "4_1", "5_1", "5_2", "6_1"}) {
        CAPTURE(name);
        auto entry = twobridge::registry_lookup(name);
        auto knot = twobridge::make_two_bridge(twobridge::registry_word(*entry));
        auto list = twobridge::explicit_metabelian_reps(knot);
        // k = 1 gives a primitive p-th root pair
        CHECK(twobridge::gamma_order_check(list.front(), knot.p) == knot.p);
        for (size_t k = 0; k + 1 < list.size(); ++k) {
            int order = twobridge::gamma_order_check(list[k], knot.p);
            CHECK(knot.p % order == 0);
            // trace of rho(x y^-1) is u + 2
            double u = twobridge::closed_form_roots(knot.p)[k];
            Word gamma = Word({1, -2});
            Complex tr = sl2::trace(list[k].evaluate(gamma));
            CHECK(std::abs(tr - Complex(u + 2.0)) < 1e-10);
        }
    }
}

TEST_CASE("trefoil golden matrices") {
    auto entry = twobridge::registry_lookup("3_1");
    auto knot = twobridge::make_two_bridge(twobridge::registry_word(*entry));
    auto list = twobridge::explicit_metabelian_reps(knot);
    REQUIRE(list.size() == 2);
    const auto& rho = list[0];

    // rho(y) = (i, 0; 3i, -i)
    CHECK(std::abs(rho.value(1).c - Complex(0.0, 3.0)) < 1e-12);
    // Phi_2 image of gamma = x y^-1 is (-2, 1; -3, 1) of order 3
    Sl2 m = rho.evaluate(Word({1, -2}));
    CHECK(std::abs(m.a - Complex(-2.0)) < 1e-12);
    CHECK(std::abs(m.b - Complex(1.0)) < 1e-12);
    CHECK(std::abs(m.c - Complex(-3.0)) < 1e-12);
    CHECK(std::abs(m.d - Complex(1.0)) < 1e-12);
    CHECK(sl2::matrix_order(m, 10) == 3);
}

TEST_CASE("riley degree matches the Alexander determinant of the trefoil") {
    // 2 deg(phi) + 1 = |Delta(-1)|, computed independently from Seifert data
    auto knot = twobridge::make_two_bridge(word_of("3_1"));
    exactlin::IntMatrix v{{1, -1}, {0, 1}}, u{{1, 0}, {-1, 1}};
    exactlin::Int det_minus1 = exactlin::alexander_polynomial(v, u).evaluate_int(-1);
    if (det_minus1 < 0) det_minus1 = -det_minus1;
    CHECK(exactlin::Int(knot.p) == det_minus1);
}

TEST_CASE("registry words are palindromic normal forms") {
    for (const auto& entry : twobridge::knot_registry()) {
        Word w = twobridge::registry_word(entry);
        CHECK(static_cast<int>(w.length()) == entry.p - 1);
        // epsilon_i = epsilon_{p-i} symmetry of the normal form
        const auto& letters = w.letters();
        for (size_t i = 0; i < letters.size(); ++i) {
            int a = letters[i] > 0 ? 1 : -1;
            int b = letters[letters.size() - 1 - i] > 0 ? 1 : -1;
            CHECK(a == b);
        }
    }
}
