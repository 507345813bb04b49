#include <doctest.h>

#include "coprod/errors.hpp"
#include "coprod/fixtures.hpp"
#include "coprod/refute/refutation.hpp"
#include "support.hpp"

using namespace coprod;
using namespace testing;

namespace {

GroupHom hom_by_labels(const GroupPtr& A, const GroupPtr& B, const std::vector<std::string>& images) {
    std::vector<ElemIndex> m;
    for (const auto& l : images) m.push_back(B->index_of(l));
    return GroupHom(A, B, m);
}

CoproductCandidate klein_candidate() {
    auto z2 = Z(2);
    auto klein = fixture_group("klein");
    return CoproductCandidate::make(z2, z2, klein, hom_by_labels(z2, klein, {"(e,e)", "(a,e)"}),
                                    hom_by_labels(z2, klein, {"(e,e)", "(e,a)"}));
}

// D4 on the square's corners 1..4: two reflections whose product is a
// quarter turn.
CoproductCandidate d4_candidate() {
    auto z2 = Z(2);
    auto d4 = fixture_group("d4");
    return CoproductCandidate::make(z2, z2, d4, hom_by_labels(z2, d4, {"()", "(2 4)"}),
                                    hom_by_labels(z2, d4, {"()", "(1 2)(3 4)"}));
}

}  // namespace

TEST_CASE("homomorphisms are validated") {
    auto z2 = Z(2), z4 = Z(4);
    CHECK_NOTHROW(GroupHom(z4, z2, {0, 1, 0, 1}));
    CHECK_THROWS_AS(GroupHom(z4, z2, {0, 1, 1, 1}), ValidationError);
    CHECK_THROWS_AS(GroupHom(z2, z4, {1, 0}), ValidationError);
    CHECK_THROWS_AS(GroupHom(z2, z4, {0, 1}), ValidationError);  // a has order 4
    CHECK_THROWS_AS(GroupHom(z2, z4, {0}), ValidationError);
    CHECK(GroupHom::trivial(z4, z2).map() == std::vector<ElemIndex>{0, 0, 0, 0});
    CHECK(compose(GroupHom(z4, z2, {0, 1, 0, 1}), GroupHom(z2, z4, {0, 2})) == GroupHom::trivial(z2, z2));
    CHECK_THROWS_AS(compose(GroupHom::identity(z4), GroupHom::identity(z2)), ValidationError);
}

TEST_CASE("hom counts match brute force") {
    auto klein = fixture_group("klein");
    CHECK(enumerate_homs(Z(2), Z(2)).size() == 2);
    CHECK(enumerate_homs(klein, Z(2)).size() == 4);
    CHECK(enumerate_homs(fixture_group("s3"), Z(1)).size() == 1);
    auto groups = small_groups();
    for (const auto& A : groups)
        for (const auto& B : groups) {
            if (A.group->order() * B.group->order() > 24) continue;
            auto homs = enumerate_homs(A.group, B.group);
            CHECK_MESSAGE(homs.size() == count_homs_brute_force(*A.group, *B.group), A.name << " -> " << B.name);
            for (std::size_t i = 0; i < homs.size(); ++i)
                for (std::size_t j = i + 1; j < homs.size(); ++j) CHECK_FALSE(homs[i] == homs[j]);
        }
    CHECK_THROWS_AS(enumerate_homs(Z(17), Z(2)), PipelineError);
    CHECK_THROWS_AS(enumerate_homs(Z(2), Z(65)), PipelineError);
}

TEST_CASE("composition is a homomorphism and orders divide") {
    auto groups = small_groups();
    for (const auto& A : groups) {
        if (A.group->order() > 6) continue;
        for (const auto& B : groups) {
            if (B.group->order() > 6) continue;
            auto ab = enumerate_homs(A.group, B.group);
            auto bb = enumerate_homs(B.group, Z(6));
            for (const auto& a : ab) {
                for (ElemIndex x = 0; x < A.group->order(); ++x)
                    CHECK(A.group->element_order(x) % B.group->element_order(a(x)) == 0);
                for (const auto& b : bb) {
                    GroupHom c = compose(b, a);
                    CHECK_NOTHROW(GroupHom(c.source(), c.target(), c.map()));
                }
            }
        }
    }
}

TEST_CASE("dihedral oracle") {
    auto z2 = Z(2);
    auto d2 = dihedral_oracle(2, z2, z2);
    CHECK(d2.group->order() == 4);
    CHECK(d2.group->is_abelian());
    for (ElemIndex x = 0; x < 4; ++x)
        if (x != d2.group->identity()) CHECK(d2.group->element_order(x) == 2);
    CHECK(d2.group->element_order(d2.group->mul(d2.r1, d2.r2)) == 2);

    for (std::uint64_t k = 3; k <= 8; ++k) {
        auto d = dihedral_oracle(k, z2, z2);
        const FiniteGroup& D = *d.group;
        CHECK(D.order() == 2 * k);
        CHECK(D.element_order(d.r1) == 2);
        CHECK(D.element_order(d.r2) == 2);
        ElemIndex rot = D.mul(d.r1, d.r2);
        CHECK(D.element_order(rot) == k);
        CHECK(D.mul(D.mul(d.r1, rot), d.r1) == D.inv(rot));
        // (gh)^k ↦ identity.
        FreeProduct fp(z2, z2);
        Word w = fp.pow(fp.normalize({{Side::G, 1}, {Side::H, 1}}), k);
        ElemIndex acc = D.identity();
        for (const auto& s : w.syllables()) acc = D.mul(acc, (s.side == Side::G ? d.f_G : d.f_H)(s.element));
        CHECK(acc == D.identity());
    }
    CHECK_THROWS_AS(dihedral_oracle(1, z2, z2), ValidationError);
    CHECK_THROWS_AS(dihedral_oracle(3, Z(3), z2), ValidationError);
}

TEST_CASE("mediating maps") {
    auto c = klein_candidate();
    // T = F with f = ι: the identity mediates.
    auto same = check_mediating_empty(c, c.iota_G, c.iota_H);
    CHECK_FALSE(same.empty);
    REQUIRE(same.witness);
    CHECK(*same.witness == GroupHom::identity(c.F));

    auto triv = CoproductCandidate::make(c.G, c.H, c.F, GroupHom::trivial(c.G, c.F), GroupHom::trivial(c.H, c.F));
    auto z3 = Z(3);
    auto r = check_mediating_empty(triv, GroupHom::trivial(c.G, z3), GroupHom::trivial(c.H, z3));
    CHECK_FALSE(r.empty);
    CHECK(*r.witness == GroupHom::trivial(c.F, z3));

    for (std::uint64_t k = 3; k <= 6; ++k) {
        auto d = dihedral_oracle(k, c.G, c.H);
        CHECK(check_mediating_empty(c, d.f_G, d.f_H).empty);
    }
    // k = 2: D_2 is the Klein group itself, and a mediating map exists.
    auto d2 = dihedral_oracle(2, c.G, c.H);
    CHECK_FALSE(check_mediating_empty(c, d2.f_G, d2.f_H).empty);
}

TEST_CASE("refute examples") {
    auto k = refute(klein_candidate(), 1, 1);
    CHECK(k.m == 2);
    CHECK(k.separation.checks.size() == 2);
    for (const auto& o : k.oracle_checks) CHECK_MESSAGE(o.passed, o.name << ": " << o.detail);

    auto base = klein_candidate();
    auto triv = CoproductCandidate::make(base.G, base.H, base.F, GroupHom::trivial(base.G, base.F),
                                         GroupHom::trivial(base.H, base.F));
    auto t = refute(triv, 1, 1);
    CHECK(t.m == 1);
    CHECK(t.separation.checks.size() == 1);

    RefuteOptions opts;
    opts.dihedral = true;
    auto d = refute(d4_candidate(), 1, 1, {}, opts);
    CHECK(d.m == 4);
    CHECK(d.separation.checks.size() == 4);
    bool saw_dihedral = false;
    for (const auto& o : d.oracle_checks) {
        CHECK_MESSAGE(o.passed, o.name << ": " << o.detail);
        saw_dihedral |= o.name == "dihedral";
    }
    CHECK(saw_dihedral);

    CHECK_THROWS_AS(refute(klein_candidate(), 0, 1), ValidationError);
}

TEST_CASE("obstruction agrees with enumeration whenever the image is small") {
    for (const auto& [gn, hn] : fixture_pairs()) {
        auto G = fixture_group(gn), H = fixture_group(hn);
        for (const auto& F : small_groups()) {
            auto homs_g = enumerate_homs(G, F.group), homs_h = enumerate_homs(H, F.group);
            auto c = CoproductCandidate::make(G, H, F.group, homs_g.back(), homs_h.back());
            auto r = refute(c, G->first_nonidentity(), H->first_nonidentity());
            auto q = image_quotient(r.separation, 64);
            if (!q) continue;
            CHECK(check_mediating_empty(c, q->f_G, q->f_H).empty);
            const FiniteGroup& T = *q->T;
            CHECK(T.element_order(T.mul(q->f_G(G->first_nonidentity()), q->f_H(H->first_nonidentity()))) > r.m);
        }
    }
}

TEST_CASE("candidate and refutation JSON") {
    auto c = klein_candidate();
    Json j = candidate_to_json(c);
    auto back = candidate_from_json(j);
    CHECK(back.iota_G == c.iota_G);
    CHECK(back.iota_H == c.iota_H);

    Json bad = j;
    bad["iota_G"]["a"] = "(e,e)";  // sends the generator to the identity: fine
    CHECK_NOTHROW(candidate_from_json(bad));
    bad["iota_G"]["e"] = "(a,e)";
    CHECK_THROWS_AS(candidate_from_json(bad), ValidationError);
    Json missing = j;
    missing.erase("F");
    CHECK_THROWS_AS(candidate_from_json(missing), ValidationError);

    Json r = refutation_to_json(refute(c, 1, 1));
    CHECK(r["m"] == 2);
    CHECK(verify_refutation(r).passed());
    Json wrong_m = r;
    wrong_m["m"] = 3;
    CHECK(verify_refutation(wrong_m).first_failure()->name == "candidate");
    Json tampered = r;
    auto& e = tampered["separation"]["target_image_mod_p"][0][0];
    e = (e.get<std::uint64_t>() + 1) % r["separation"]["p"].get<std::uint64_t>();
    CHECK(verify_refutation(tampered).first_failure()->name == "separation/product");
}
