#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "heawood/charpoly.hpp"

using namespace heawood;

namespace {

// Roots computed independently with a computer algebra system.
const char* const kRoots[] = {
    "-0.730124164909779253961304348363", "-0.726683199493846823583525736151",
    "-0.703710742461605728124263062995", "-0.684712058372329868316533015996",
    "-0.670501397919510846464884548154", "-0.669210808032413949381135939365",
    "-0.640749333843699722647496424720", "-0.430001939003160349798723768439",
    "-0.426496853699921081098240681370", "-0.258168717626868552884103929457",
    "-0.0624487319203710776401072427623",
};

mpq_class q(const char* s) { return mpq_class(s); }

} // namespace

TEST_CASE("coefficients")
{
    const BigPoly& p = charpoly_xl4();
    CHECK(p.degree() == 79);
    CHECK(p.coeff(0) == mpz_class("3348011046054687446588586894387"));
    CHECK(p.coeff(1) == mpz_class("273675328487397647237991825000783"));
    CHECK(p.coeff(79) == mpz_class("82521703002365615643033600000"));
    CHECK(p.coeff(78) == mpz_class("152135800369825007098920960000"));

    const int expected_digits[80] = {
        31, 33, 35, 36, 37, 38, 39, 40, 41, 42, 43, 43, 44, 44, 45, 45, 46, 46, 46, 47,
        47, 47, 47, 47, 47, 47, 47, 47, 47, 46, 46, 46, 45, 45, 45, 44, 44, 45, 45, 45,
        44, 44, 43, 44, 43, 43, 43, 42, 42, 42, 42, 42, 41, 41, 41, 41, 40, 40, 40, 40,
        38, 39, 39, 38, 38, 37, 36, 36, 36, 35, 35, 34, 33, 33, 33, 32, 31, 31, 30, 29,
    };
    int total = 0;
    for (int k = 0; k <= 79; ++k) {
        const mpz_class a = abs(p.coeff(k));
        const int d = static_cast<int>(a.get_str().size());
        CHECK_MESSAGE(d == expected_digits[k], "T^" << k);
        total += d;
    }
    CHECK(total == 3271);
}

TEST_CASE("value and absolute coefficient sum at one")
{
    const BigPoly& p = charpoly_xl4();
    mpz_class sum = 0;
    mpz_class abs_sum = 0;
    for (const mpz_class& c : p.coefficients()) {
        sum += c;
        abs_sum += abs(c);
    }
    CHECK(sum == mpz_class("270121907476767733497473890516992000000000000000"));
    CHECK(abs_sum == mpz_class("271287292088213682844385219583964030999747272846"));
    CHECK(eval_exact(p, 1) == mpq_class(sum));
    CHECK(p.sign_at(1) == 1);
}

TEST_CASE("Sturm counts on small polynomials")
{
    const BigPoly t2m1{-1, 0, 1};
    CHECK(count_real_roots(t2m1) == 2);
    CHECK(count_real_roots(t2m1, -2, 0) == 1);
    CHECK(count_real_roots(t2m1, -1, 1) == 1); // (-1, 1]
    CHECK(count_real_roots(t2m1, q("-3/2"), q("3/2")) == 2);
    CHECK(count_real_roots(BigPoly{1, 0, 1}) == 0);
    CHECK(count_real_roots(BigPoly{0, -6, 11, -6, 1}) == 4); // T(T-1)(T-2)(T-3)
}

TEST_CASE("non-squarefree input is rejected with its squarefree part")
{
    // (T-1)^2 (T+1) = T^3 - T^2 - T + 1
    const BigPoly p{1, -1, -1, 1};
    CHECK_FALSE(is_squarefree(p));
    try {
        count_real_roots(p);
        FAIL("expected NotSquarefree");
    } catch (const NotSquarefree& e) {
        CHECK(e.squarefree_part() == BigPoly{-1, 0, 1});
        CHECK(count_real_roots(e.squarefree_part()) == 2);
    }
}

TEST_CASE("the degree-79 polynomial has 11 real roots")
{
    const BigPoly& p = charpoly_xl4();
    CHECK(is_squarefree(p));
    CHECK(count_real_roots(p) == 11);
    CHECK(count_real_roots(p, -4, 4) == 11);
    CHECK(count_real_roots(p, q("-4/5"), q("-3/5")) == 7);
    CHECK(count_real_roots(p, -1000, -1) == 0);
    CHECK(count_real_roots(p, 3, 1000) == 0);
    CHECK(p.sign_at(q("-3/5")) != 0);
}

TEST_CASE("isolation and refinement")
{
    const BigPoly& p = charpoly_xl4();
    const std::vector<IsolatingInterval> ivs = isolate_real_roots(p);
    REQUIRE(ivs.size() == 11);
    for (std::size_t i = 0; i < ivs.size(); ++i) {
        CHECK(ivs[i].lo < ivs[i].hi);
        CHECK(count_real_roots(p, ivs[i].lo, ivs[i].hi) == 1);
        if (i > 0)
            CHECK(ivs[i - 1].hi <= ivs[i].lo);

        const Real r = refine_root(p, ivs[i], 30);
        const Real expected = Real::parse(kRoots[i], Precision(40));
        CHECK_MESSAGE(abs(r - expected).to_double() < 1e-29, "root " << i + 1);
    }
}

TEST_CASE("roots are well separated")
{
    for (std::size_t i = 1; i < std::size(kRoots); ++i)
        CHECK(std::stod(kRoots[i]) - std::stod(kRoots[i - 1]) > 1e-4);
}

TEST_CASE("sqrt(2) by isolation")
{
    const BigPoly p{-2, 0, 1};
    const auto ivs = isolate_real_roots(p);
    REQUIRE(ivs.size() == 2);
    const Real r = refine_root(p, ivs[1], 30);
    CHECK(abs(r - Real::parse("1.41421356237309504880168872421", Precision(40))).to_double() < 1e-29);
}

TEST_CASE("roots match l4 in the reference tables")
{
    const BigPoly& p = charpoly_xl4();
    const auto ivs = isolate_real_roots(p);
    int close = 0;
    for (const ReferenceTable& t : testing::reference_tables()) {
        const Real x = Real::parse(t.vertices.at(line(4))[0], Precision(40));
        double best = 1.0;
        for (const auto& iv : ivs)
            best = std::min(best, abs(refine_root(p, iv, 25) - x).to_double());
        CHECK(best < 1e-9);
        if (best < 1e-14)
            ++close;
    }
    CHECK(close >= 10);
}

TEST_CASE("gcd and quotient")
{
    const BigPoly a{-1, 0, 1};        // (T-1)(T+1)
    const BigPoly b{1, -2, 1};        // (T-1)^2
    CHECK(poly_gcd(a, b) == BigPoly{-1, 1});
    CHECK(exact_quotient(a, BigPoly{-1, 1}) == BigPoly{1, 1});
    CHECK_THROWS_AS(exact_quotient(a, BigPoly{2, 1}), std::domain_error);
    CHECK(BigPoly{3, 6, 9}.primitive() == BigPoly{1, 2, 3});
    CHECK(BigPoly{1, 2, 3}.derivative() == BigPoly{2, 6});
}
