#include <doctest.h>

#include "coprod/arith/fp.hpp"
#include "coprod/arith/matrix.hpp"
#include "coprod/arith/poly.hpp"
#include "coprod/arith/rat.hpp"
#include "coprod/arith/ratfunc.hpp"
#include "coprod/errors.hpp"
#include "support.hpp"

using namespace coprod;
using testing::naive_gcd;
using testing::random_poly;

namespace {
const Poly t = Poly::t();
}

TEST_CASE("rat normal form") {
    Rat a(BigInt(6), BigInt(-4));
    CHECK(a.num() == -3);
    CHECK(a.den() == 2);
    CHECK(Rat(0).str() == "0/1");
    CHECK(Rat::parse("-10/4") == Rat(BigInt(-5), BigInt(2)));
    CHECK(Rat::parse("7") == Rat(7));
    CHECK_THROWS_AS(Rat::parse("1/0"), ValidationError);
    CHECK_THROWS_AS(Rat::parse("x"), ValidationError);
    CHECK_THROWS_AS(Rat(0).inverse(), ArithmeticError);
}

TEST_CASE("poly gcd examples") {
    CHECK(poly_gcd(t * t - 1, t * t - t * 2 + 1) == t - 1);
    Poly p = t * 3 + 6;
    CHECK(poly_gcd(p, Poly()) == p.monic());
    CHECK(poly_gcd(Poly(), p) == t + 2);
    CHECK(poly_gcd(t + 1, t + 2).is_one());
    CHECK_THROWS_AS(poly_gcd(Poly(), Poly()), ArithmeticError);
}

TEST_CASE("poly lcm examples") {
    CHECK(poly_lcm(t, t * t) == t * t);
    CHECK(poly_lcm(t - 1, t + 1) == t * t - 1);
    CHECK(poly_lcm(t * 2, t * 3) == t);
    CHECK_THROWS_AS(poly_lcm(Poly(), t), ArithmeticError);
}

TEST_CASE("poly eval examples") {
    CHECK((t * t + 1).eval(2) == 5);
    CHECK(Poly().eval(Rat(BigInt(3), BigInt(7))) == 0);
    CHECK((t - 3).eval(3) == 0);
    CHECK(Poly().degree() == -1);
    CHECK(Poly({0, 0}).is_zero());
}

TEST_CASE("poly divmod reconstructs the dividend") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        Poly a = random_poly(rng, 8, 10), b = random_poly(rng, 5, 10);
        if (b.is_zero()) continue;
        auto [q, r] = poly_divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
    CHECK_THROWS_AS(poly_div_exact(t + 1, t), ArithmeticError);
}

TEST_CASE("gcd divides both inputs, agrees with schoolbook Euclid, and gcd·lcm = a·b") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 300; ++i) {
        // A planted common factor makes nontrivial gcds common.
        Poly c = random_poly(rng, 3, 10);
        Poly a = random_poly(rng, 5, 10) * c, b = random_poly(rng, 5, 10) * c;
        if (a.is_zero() && b.is_zero()) continue;
        Poly g = poly_gcd(a, b);
        CHECK(g == naive_gcd(a, b));
        CHECK(g.lead() == 1);
        CHECK(poly_divmod(a, g).second.is_zero());
        CHECK(poly_divmod(b, g).second.is_zero());
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(g * poly_lcm(a, b) == (a * b).monic());
    }
}

TEST_CASE("gcd of high-degree inputs stays exact") {
    Poly a = 1, b = 1;
    for (int k = 1; k <= 6; ++k) {
        a = a * (t * k + 1);
        b = b * (t * k - 1);
    }
    Poly shared = t * t + t * 7 + 3;
    CHECK(poly_gcd(a * shared, b * shared) == shared);
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        Poly a = random_poly(rng, 6, 20), b = random_poly(rng, 6, 20);
        Rat s(BigInt(static_cast<long>(rng() % 41) - 20), BigInt(static_cast<long>(rng() % 9) + 1));
        CHECK((a * b).eval(s) == a.eval(s) * b.eval(s));
        CHECK((a + b).eval(s) == a.eval(s) + b.eval(s));
    }
}

TEST_CASE("rational functions normalize") {
    RatFunc f(t * t - 1, (t - 1) * 2);
    CHECK(f.num() == (t + 1) * Rat(BigInt(1), BigInt(2)));
    CHECK(f.den().is_one());
    CHECK(RatFunc(t, t * 3) == RatFunc(Rat(BigInt(1), BigInt(3))));
    CHECK_THROWS_AS(RatFunc(t, Poly()), ArithmeticError);
    RatFunc g(Poly(1), t + 1);
    CHECK((g + RatFunc(Poly(1), t - 1)) == RatFunc(t * 2, t * t - 1));
    CHECK((g * g.inverse()).is_one());
    CHECK(g.eval(1) == Rat(BigInt(1), BigInt(2)));
    CHECK_THROWS_AS(g.eval(-1), ArithmeticError);
    CHECK(RatFunc(Rat(5)).is_constant());
}

TEST_CASE("rational function arithmetic matches pointwise evaluation") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 100; ++i) {
        Poly a = random_poly(rng, 3, 5), b = random_poly(rng, 3, 5), c = random_poly(rng, 3, 5),
             d = random_poly(rng, 3, 5);
        if (b.is_zero() || d.is_zero()) continue;
        RatFunc x(a, b), y(c, d);
        for (int s = 30; s < 34; ++s) {
            if (b.eval(s).is_zero() || d.eval(s).is_zero()) continue;
            CHECK((x + y).eval(s) == x.eval(s) + y.eval(s));
            CHECK((x * y).eval(s) == x.eval(s) * y.eval(s));
            CHECK((x - y).eval(s) == x.eval(s) - y.eval(s));
        }
    }
}

TEST_CASE("primes and Z/p") {
    CHECK(is_prime(2));
    CHECK(is_prime(4294967291ULL));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
    CHECK(next_prime(7) == 11);
    CHECK_THROWS_AS(FpElem(1, 6), ArithmeticError);
    CHECK_THROWS_AS(FpElem(1, 5) + FpElem(1, 7), ArithmeticError);
    CHECK((FpElem(3, 7) * FpElem(3, 7).inverse()).is_one());
    CHECK_THROWS_AS(FpElem(0, 7).inverse(), ArithmeticError);
}

TEST_CASE("rat_to_fp examples") {
    CHECK(rat_to_fp(Rat(BigInt(1), BigInt(2)), 5).value() == 3);
    CHECK(rat_to_fp(Rat(0), 13).value() == 0);
    CHECK(rat_to_fp(Rat(-1), 13).value() == 12);
    CHECK_THROWS_AS(rat_to_fp(Rat(BigInt(1), BigInt(3)), 3), ArithmeticError);
}

TEST_CASE("rat_to_fp is a ring homomorphism") {
    std::mt19937_64 rng(9);
    for (std::uint64_t p : {2ULL, 3ULL, 101ULL, 65537ULL}) {
        for (int i = 0; i < 200; ++i) {
            auto draw = [&] {
                long n = static_cast<long>(rng() % 2001) - 1000;
                long d = static_cast<long>(rng() % 500) + 1;
                while (d % static_cast<long>(p) == 0) ++d;
                return Rat(BigInt(n), BigInt(d));
            };
            Rat a = draw(), b = draw();
            CHECK(rat_to_fp(a + b, p) == rat_to_fp(a, p) + rat_to_fp(b, p));
            CHECK(rat_to_fp(a * b, p) == rat_to_fp(a, p) * rat_to_fp(b, p));
        }
    }
}

TEST_CASE("matrix examples") {
    using M = Matrix<Rat>;
    M I = M::identity(3);
    CHECK(I.inverse() == I);
    M swap(2, 2, {0, 1, 1, 0});
    CHECK(swap.det() == -1);
    M a(2, 2, {1, 2, 3, 4});
    CHECK(a.pow(0) == M::identity(2));
    CHECK(a.pow(3) == a * a * a);
    M singular(2, 2, {1, 2, 2, 4});
    CHECK(singular.det() == 0);
    CHECK_THROWS_WITH_AS(singular.inverse("conjugator"), "conjugator not invertible", ArithmeticError);
    CHECK_THROWS_AS(M(2, 3, {1, 2, 3, 4, 5, 6}) * M(2, 2, {1, 0, 0, 1}), ArithmeticError);
    CHECK(direct_sum(swap, M::identity(1)) == M(3, 3, {0, 1, 0, 1, 0, 0, 0, 0, 1}));
}

TEST_CASE("random invertible matrices times their inverse give I") {
    std::mt19937_64 rng(31);
    int tested = 0;
    while (tested < 100) {
        std::size_t n = 1 + rng() % 4;
        std::vector<Rat> v;
        for (std::size_t i = 0; i < n * n; ++i)
            v.emplace_back(BigInt(static_cast<long>(rng() % 21) - 10), BigInt(static_cast<long>(rng() % 4) + 1));
        Matrix<Rat> m(n, n, v);
        if (m.det().is_zero()) continue;
        ++tested;
        CHECK(m * m.inverse() == Matrix<Rat>::identity(n));
        CHECK(m.inverse() * m == Matrix<Rat>::identity(n));
    }
}

TEST_CASE("matrices over Z/p and Q(t)") {
    Matrix<FpElem> a(2, 2, {FpElem(1, 7), FpElem(1, 7), FpElem(0, 7), FpElem(1, 7)});
    CHECK(a.pow(7).is_identity());
    CHECK_FALSE(a.pow(6).is_identity());
    Matrix<RatFunc> c(2, 2, {RatFunc(t + 1), RatFunc(t), RatFunc(t), RatFunc(t + 1)});
    CHECK(c.det() == RatFunc(t * 2 + 1));
    CHECK((c * c.inverse()).is_identity());
}
