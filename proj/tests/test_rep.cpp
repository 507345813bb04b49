#include <doctest.h>

#include "coprod/errors.hpp"
#include "coprod/fixtures.hpp"
#include "coprod/rep/representation.hpp"
#include "coprod/separation/pipeline.hpp"
#include "support.hpp"

#include <random>

using namespace coprod;
using namespace testing;

namespace {

const FunctionFieldRep& fixture_rep(std::size_t i) {
    static const std::vector<FunctionFieldRep> reps = [] {
        std::vector<FunctionFieldRep> out;
        for (const auto& [g, h] : fixture_pairs()) {
            FreeProduct fp(fixture_group(g), fixture_group(h));
            out.push_back(build_function_field_rep(fp, ConjugatorSpec::random(1)));
        }
        return out;
    }();
    return reps.at(i);
}

}  // namespace

TEST_CASE("regular representation") {
    auto z2 = cyclic_group(2);
    auto r = build_regular_rep(z2);
    CHECK(r.dim == 2);
    CHECK(r.images[0].is_identity());
    CHECK(r.images[1] == RatMatrix(2, 2, {0, 1, 1, 0}));

    auto s3 = group_from_permutations({{2, 1, 3}, {2, 3, 1}});
    auto rs = build_regular_rep(s3);
    for (ElemIndex x = 0; x < 6; ++x)
        for (ElemIndex y = 0; y < 6; ++y) {
            if (x != y) CHECK_FALSE(rs.images[x] == rs.images[y]);
            CHECK(rs.images[x] * rs.images[y] == rs.images[s3.mul(x, y)]);
        }
}

TEST_CASE("product representation") {
    auto z2 = cyclic_group(2);
    auto p = build_product_rep(z2, z2);
    CHECK(p.dim == 4);
    CHECK(p.imageG[0] == RatMatrix::identity(4));
    CHECK(p.imageG[1] * p.imageH[1] == p.imageH[1] * p.imageG[1]);
    CHECK_THROWS_AS(build_product_rep(z2, cyclic_group(1)), ValidationError);

    // Faithful on G×H: distinct pairs give distinct matrices.
    auto s3 = group_from_permutations({{2, 1, 3}, {2, 3, 1}});
    auto q = build_product_rep(s3, z2);
    std::vector<RatMatrix> seen;
    for (ElemIndex a = 0; a < 6; ++a)
        for (ElemIndex b = 0; b < 2; ++b) {
            RatMatrix m = q.imageG[a] * q.imageH[b];
            for (const auto& s : seen) CHECK_FALSE(s == m);
            seen.push_back(m);
        }
}

TEST_CASE("conjugator specs") {
    CHECK(ConjugatorSpec::parse("all-ones") == ConjugatorSpec{});
    CHECK(ConjugatorSpec::parse("random:42") == ConjugatorSpec::random(42));
    CHECK(ConjugatorSpec::random(7).str() == "random:7");
    CHECK_THROWS_AS(ConjugatorSpec::parse("random:"), ValidationError);
    CHECK_THROWS_AS(ConjugatorSpec::parse("ones"), ValidationError);
    // Same seed, same matrix.
    CHECK(ConjugatorSpec::random(3).matrix(5) == ConjugatorSpec::random(3).matrix(5));
}

TEST_CASE("all-ones conjugator has det 1 + n t") {
    const Poly t = Poly::t();
    for (std::size_t n = 2; n <= 8; ++n) {
        FuncMatrix c = ConjugatorSpec{}.matrix(n);
        CHECK(c.det() == RatFunc(t * Rat(static_cast<int>(n)) + 1));
        // Sherman–Morrison: C⁻¹ = I − t/(1 + n t)·E.
        RatFunc off(-t, t * Rat(static_cast<int>(n)) + 1);
        FuncMatrix inv = c.inverse();
        CHECK(inv.at(0, 1) == off);
        CHECK(inv.at(0, 0) == RatFunc(1) + off);
    }
}

TEST_CASE("all-ones conjugator collides on the commutator") {
    FreeProduct fp(Z(2), Z(2));
    try {
        (void)build_function_field_rep(fp, ConjugatorSpec{});
        FAIL("expected a collision");
    } catch (const FaithfulnessError& e) {
        CHECK(e.conjugator() == ConjugatorSpec{});
        CHECK_FALSE(e.word().is_identity());
        // The colliding word really maps to I under the H-block-only rep.
        auto p = build_product_rep(fp.G(), fp.H());
        RatMatrix acc = RatMatrix::identity(4);
        for (const auto& s : e.word().syllables()) acc = acc * (s.side == Side::G ? p.imageG : p.imageH)[s.element];
        CHECK(acc.is_identity());
    }
    CHECK_THROWS_AS(build_function_field_rep(fp, ConjugatorSpec::random(1), 1), ValidationError);
}

TEST_CASE("function field rep basics") {
    const auto& rep = fixture_rep(0);
    const FreeProduct& fp = rep.free_product();
    CHECK(rep.dim() == 4);
    CHECK(rep.verified_length() == kDefaultVerifyLen);
    CHECK(rep_apply(rep, fp.normalize({})).is_identity());
    Word g = fp.syllable(Side::G, 1), h = fp.syllable(Side::H, 1);
    const FuncMatrix g_img = rep_apply(rep, g), gh_img = rep_apply(rep, fp.mul(g, h));
    for (const auto& e : g_img.entries()) CHECK(e.is_constant());
    bool t_dependent = false;
    for (const auto& e : gh_img.entries()) t_dependent |= !e.is_constant();
    CHECK(t_dependent);
    CHECK(rep.syllables().size() == 2);
}

TEST_CASE("det of every syllable image is ±1 and syllable images have the factor's order") {
    for (std::size_t i = 0; i < fixture_pairs().size(); ++i) {
        const auto& rep = fixture_rep(i);
        const FreeProduct& fp = rep.free_product();
        for (const auto& s : rep.syllables()) {
            RatFunc d = rep.image(s).det();
            CHECK((d == RatFunc(1) || d == RatFunc(-1)));
            const std::uint64_t ord = fp.factor(s.side).element_order(s.element);
            CHECK(rep.image(s).pow(ord).is_identity());
            for (std::uint64_t k = 1; k < ord; ++k) CHECK_FALSE(rep.image(s).pow(k).is_identity());
        }
    }
}

TEST_CASE("rep is a homomorphism on random word pairs") {
    std::mt19937_64 rng(17);
    for (std::size_t i = 0; i < fixture_pairs().size(); ++i) {
        const auto& rep = fixture_rep(i);
        const FreeProduct& fp = rep.free_product();
        for (int j = 0; j < 200; ++j) {
            Word a = random_word(fp, rng, 4), b = random_word(fp, rng, 4);
            CHECK(rep_apply(rep, fp.mul(a, b)) == rep_apply(rep, a) * rep_apply(rep, b));
        }
    }
}

TEST_CASE("seeded conjugators are faithful on short words of every fixture pair") {
    for (std::size_t i = 0; i < fixture_pairs().size(); ++i) {
        const auto& rep = fixture_rep(i);
        const FreeProduct& fp = rep.free_product();
        // Symbolic check, independent of the screened verification.
        fp.for_each_reduced_word(4, [&](const Word& w) {
            if (!w.is_identity()) CHECK_FALSE(rep_apply(rep, w).is_identity());
        });
    }
}
