#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "refsev/errors.hpp"
#include "refsev/json_io.hpp"
#include "refsev/ring.hpp"

using namespace refsev;

namespace {

LaurentY random_poly(std::mt19937_64& g, int max_abs_e2, long max_abs_coeff) {
    std::uniform_int_distribution<int> de2(-max_abs_e2, max_abs_e2);
    std::uniform_int_distribution<long> dc(-max_abs_coeff, max_abs_coeff);
    LaurentY p;
    const int terms = static_cast<int>(g() % 5);
    for (int t = 0; t < terms; ++t) p += LaurentY::term(de2(g), dc(g));
    return p;
}

} // namespace

TEST_CASE("factorial and binomial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == BigInt("2432902008176640000"));
    CHECK(binomial(7, 5) == 21);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(4, 5) == 0);
    CHECK(binomial(3, -1) == 0);
}

TEST_CASE("quantum integers") {
    CHECK(quantum_integer(0) == LaurentY(0));
    CHECK(quantum_integer(1) == LaurentY(1));
    CHECK(quantum_integer(2) == LaurentY::term(-1, 1) + LaurentY::term(1, 1));
    CHECK(quantum_integer(3) ==
          LaurentY::term(-2, 1) + LaurentY(1) + LaurentY::term(2, 1));
    CHECK(quantum_integer(-2) == -quantum_integer(2));

    for (long n = 1; n <= 9; ++n) {
        const LaurentY q = quantum_integer(n);
        CHECK(q.is_symmetric());
        CHECK_FALSE(q.has_negative_coeff());
        const GaussianInt at1 = q.eval(EvalPoint::One);
        CHECK(at1.re == n);
        CHECK(at1.im == 0);
        // at y = -1 the value alternates 1, 0, -1, 0, ...
        const GaussianInt atm1 = q.eval(EvalPoint::MinusOne);
        CHECK(atm1.im == 0);
        CHECK(atm1.re == (n % 2 == 0 ? 0 : (n % 4 == 1 ? 1 : -1)));
    }
}

TEST_CASE("laurent arithmetic") {
    const LaurentY a = LaurentY::term(2, 1) + LaurentY(3); // y + 3
    const LaurentY b = LaurentY::term(-2, 2) - LaurentY(1); // 2/y - 1

    CHECK(a + b - b == a);
    CHECK(a * b == b * a);
    CHECK(a * (b + LaurentY(1)) == a * b + a);
    CHECK((a - a).is_zero());
    CHECK(-(-a) == a);
    CHECK(a * LaurentY(0) == LaurentY(0));

    std::mt19937_64 g(20260816);
    for (int i = 0; i < 200; ++i) {
        const LaurentY p = random_poly(g, 6, 9);
        const LaurentY q = random_poly(g, 6, 9);
        const LaurentY r = random_poly(g, 6, 9);
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
    }
}

TEST_CASE("exponent range and content") {
    const LaurentY p = LaurentY::term(-3, 4) + LaurentY::term(5, -6);
    CHECK(p.min_exponent2() == -3);
    CHECK(p.max_exponent2() == 5);
    CHECK(p.content() == 2);
    CHECK(p.divided_by(2) == LaurentY::term(-3, 2) + LaurentY::term(5, -3));
    CHECK_THROWS_AS(LaurentY(0).min_exponent2(), DomainError);
    CHECK_THROWS_AS(p.divided_by(4), DomainError);
}

TEST_CASE("exact division") {
    std::mt19937_64 g(77);
    int nontrivial = 0;
    for (int i = 0; i < 300; ++i) {
        const LaurentY a = random_poly(g, 5, 7);
        const LaurentY b = random_poly(g, 5, 7);
        if (b.is_zero()) continue;
        CHECK(divide_exact(a * b, b) == a);
        if (!a.is_zero()) ++nontrivial;
    }
    CHECK(nontrivial > 100);
    // [6] / [2] = y^2 + 1 + y^-2 (a quantum 3 in the squared variable)
    CHECK(divide_exact(quantum_integer(6), quantum_integer(2)) ==
          LaurentY::term(4, 1) + LaurentY::term(0, 1) + LaurentY::term(-4, 1));
    CHECK_THROWS_AS(divide_exact(LaurentY(1), quantum_integer(2)),
                    DomainError);
    CHECK_THROWS_AS(divide_exact(LaurentY(1), LaurentY(0)), DomainError);
}

TEST_CASE("evaluation at y = -1 is Gaussian-integer valued") {
    // y^(1/2) |-> i
    CHECK(LaurentY::term(1, 1).eval(EvalPoint::MinusOne) ==
          GaussianInt{0, 1});
    CHECK(LaurentY::term(-1, 1).eval(EvalPoint::MinusOne) ==
          GaussianInt{0, -1});
    CHECK(LaurentY::term(2, 1).eval(EvalPoint::MinusOne) ==
          GaussianInt{-1, 0});
    CHECK(LaurentY::term(-4, 3).eval(EvalPoint::MinusOne) ==
          GaussianInt{3, 0});

    const LaurentY n31 =
        LaurentY::term(-2, 1) + LaurentY(10) + LaurentY::term(2, 1);
    CHECK(n31.eval(EvalPoint::One) == GaussianInt{12, 0});
    CHECK(n31.eval(EvalPoint::MinusOne) == GaussianInt{8, 0});

    // symmetric polynomials evaluate to real numbers at y = -1
    std::mt19937_64 g(5150);
    for (int i = 0; i < 100; ++i) {
        LaurentY p = random_poly(g, 6, 9);
        LaurentY sym = p;
        for (const auto& [e2, c] : p.terms()) sym += LaurentY::term(-e2, c);
        CHECK(sym.is_symmetric());
        CHECK(sym.eval(EvalPoint::MinusOne).im == 0);
    }
}

TEST_CASE("printing") {
    CHECK(LaurentY(0).str() == "0");
    CHECK(LaurentY(5).str() == "5");
    CHECK((LaurentY::term(-2, 1) + LaurentY(10) + LaurentY::term(2, 1)).str() ==
          "y^-1 + 10 + y");
    CHECK(quantum_integer(2).str() == "y^(-1/2) + y^(1/2)");
    CHECK((LaurentY::term(4, 2) - LaurentY(1)).str() == "-1 + 2*y^2");
    CHECK(GaussianInt{3, 0}.str() == "3");
    CHECK(GaussianInt{0, 0}.str() == "0");
}

TEST_CASE("rational layer") {
    const RationalLaurentY half(quantum_integer(2), 2);
    CHECK((half + half).as_integral() == quantum_integer(2));
    CHECK_THROWS_AS(half.as_integral(), DomainError);

    const RationalLaurentY a(LaurentY(6), 4); // reduces to 3/2
    CHECK(a == RationalLaurentY(LaurentY(3), 2));
    CHECK((a * RationalLaurentY(LaurentY(2), 3)).as_integral() == LaurentY(1));
    CHECK((-a + a).as_integral() == LaurentY(0));
    CHECK(a.divided_by(3) == RationalLaurentY(LaurentY(1), 2));
    CHECK((a * quantum_integer(2) * BigInt(2)).as_integral() ==
          quantum_integer(2) * BigInt(3));
}

TEST_CASE("json round trip") {
    std::mt19937_64 g(991);
    for (int i = 0; i < 50; ++i) {
        const LaurentY p = random_poly(g, 8, 1000);
        CHECK(laurent_from_json(laurent_to_json(p)) == p);
    }
    const auto j = laurent_to_json(LaurentY::term(-2, 1) + LaurentY(10) +
                                   LaurentY::term(2, 1));
    CHECK(j.dump() ==
          R"({"halfpowers":true,"terms":[[-2,"1"],[0,"10"],[2,"1"]]})");
    CHECK_THROWS_AS(laurent_from_json(nlohmann::json{{"terms", 3}}),
                    DomainError);
}
