#include "coprod/refute/refutation.hpp"

#include "coprod/errors.hpp"

#include <deque>
#include <functional>
#include <map>

namespace coprod {

GroupHom::GroupHom(GroupPtr source, GroupPtr target, std::vector<ElemIndex> map)
    : src_(std::move(source)), tgt_(std::move(target)), map_(std::move(map)) {
    const FiniteGroup& A = *src_;
    const FiniteGroup& B = *tgt_;
    if (map_.size() != A.order()) throw ValidationError("homomorphism table has the wrong length");
    for (ElemIndex v : map_)
        if (v >= B.order()) throw ValidationError("homomorphism image out of range");
    if (map_[A.identity()] != B.identity()) throw ValidationError("homomorphism does not fix the identity");
    for (ElemIndex x = 0; x < A.order(); ++x)
        for (ElemIndex y = 0; y < A.order(); ++y)
            if (map_[A.mul(x, y)] != B.mul(map_[x], map_[y]))
                throw ValidationError("map is not a homomorphism at (" + A.label(x) + ", " + A.label(y) + ")");
}

GroupHom GroupHom::trivial(GroupPtr source, GroupPtr target) {
    std::vector<ElemIndex> m(source->order(), target->identity());
    return GroupHom(std::move(source), std::move(target), std::move(m), Trusted{});
}

GroupHom GroupHom::identity(GroupPtr group) {
    std::vector<ElemIndex> m(group->order());
    for (ElemIndex i = 0; i < m.size(); ++i) m[i] = i;
    return GroupHom(group, group, std::move(m), Trusted{});
}

GroupHom compose(const GroupHom& after, const GroupHom& before) {
    if (!(*before.target() == *after.source())) throw ValidationError("homomorphisms do not compose");
    std::vector<ElemIndex> m(before.map().size());
    for (ElemIndex x = 0; x < m.size(); ++x) m[x] = after(before(x));
    return GroupHom(before.source(), after.target(), std::move(m), GroupHom::Trusted{});
}

CoproductCandidate CoproductCandidate::make(GroupPtr G, GroupPtr H, GroupPtr F, GroupHom iota_G, GroupHom iota_H) {
    if (!(*iota_G.source() == *G) || !(*iota_G.target() == *F))
        throw ValidationError("iota_G must map G to F");
    if (!(*iota_H.source() == *H) || !(*iota_H.target() == *F))
        throw ValidationError("iota_H must map H to F");
    return {std::move(G), std::move(H), std::move(F), std::move(iota_G), std::move(iota_H)};
}

namespace {

// Greedy generating set in index order.
std::vector<ElemIndex> generating_set(const FiniteGroup& A) {
    std::vector<bool> in(A.order());
    in[A.identity()] = true;
    std::vector<ElemIndex> members{A.identity()};
    std::vector<ElemIndex> gens;
    for (ElemIndex x = 0; x < A.order(); ++x) {
        if (in[x]) continue;
        gens.push_back(x);
        // Re-close under right multiplication by every generator.
        std::deque<ElemIndex> queue(members.begin(), members.end());
        while (!queue.empty()) {
            ElemIndex y = queue.front();
            queue.pop_front();
            for (ElemIndex g : gens) {
                ElemIndex z = A.mul(y, g);
                if (!in[z]) {
                    in[z] = true;
                    members.push_back(z);
                    queue.push_back(z);
                }
            }
        }
    }
    return gens;
}

// Extends generator images along the Cayley graph of ⟨gens[0..count)⟩.
// Returns false on a conflict; on success `map` holds the values on that
// subgroup (unset entries are B.order()).
bool extend_images(const FiniteGroup& A, const FiniteGroup& B, const std::vector<ElemIndex>& gens,
                   const std::vector<ElemIndex>& images, std::size_t count, std::vector<ElemIndex>& map) {
    const ElemIndex unset = static_cast<ElemIndex>(B.order());
    map.assign(A.order(), unset);
    map[A.identity()] = B.identity();
    std::deque<ElemIndex> queue{A.identity()};
    while (!queue.empty()) {
        ElemIndex x = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < count; ++i) {
            ElemIndex y = A.mul(x, gens[i]);
            ElemIndex v = B.mul(map[x], images[i]);
            if (map[y] == unset) {
                map[y] = v;
                queue.push_back(y);
            } else if (map[y] != v) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

std::vector<GroupHom> enumerate_homs(const GroupPtr& A, const GroupPtr& B, const EnumerationBudget& budget) {
    if (A->order() > budget.max_source || B->order() > budget.max_target)
        throw PipelineError("hom enumeration budget exceeded (|A| = " + std::to_string(A->order()) +
                            ", |B| = " + std::to_string(B->order()) + ")");
    const std::vector<ElemIndex> gens = generating_set(*A);
    std::vector<ElemIndex> images(gens.size());
    std::vector<ElemIndex> map;
    std::vector<GroupHom> out;
    std::function<void(std::size_t)> assign = [&](std::size_t i) {
        if (i == gens.size()) {
            extend_images(*A, *B, gens, images, gens.size(), map);
            out.push_back(GroupHom(A, B, map, GroupHom::Trusted{}));
            return;
        }
        const std::uint64_t order = A->element_order(gens[i]);
        for (ElemIndex b = 0; b < B->order(); ++b) {
            if (order % B->element_order(b) != 0) continue;
            images[i] = b;
            if (extend_images(*A, *B, gens, images, i + 1, map)) assign(i + 1);
        }
    };
    assign(0);
    return out;
}

MediatingResult check_mediating_empty(const CoproductCandidate& candidate, const GroupHom& f_G, const GroupHom& f_H,
                                      const EnumerationBudget& budget) {
    const GroupPtr& T = f_G.target();
    if (!(*f_H.target() == *T)) throw ValidationError("f_G and f_H must share a target");
    for (const GroupHom& f : enumerate_homs(candidate.F, T, budget)) {
        if (compose(f, candidate.iota_G) == f_G && compose(f, candidate.iota_H) == f_H)
            return {false, f};
    }
    return {true, std::nullopt};
}

DihedralOracle dihedral_oracle(std::uint64_t k, const GroupPtr& G, const GroupPtr& H) {
    if (k < 2) throw ValidationError("dihedral oracle needs k >= 2");
    if (G->order() != 2 || H->order() != 2) throw ValidationError("dihedral oracle needs two factors of order 2");
    // Regular action of the affine maps x ↦ ±x + a on Z/k; point (a, b)
    // stands for x ↦ (-1)^b x + a and has index a + k·b.
    const std::uint32_t n = static_cast<std::uint32_t>(2 * k);
    auto left_mult = [&](std::uint64_t a1, std::uint64_t b1) {
        Permutation perm(n);
        for (std::uint64_t b = 0; b < 2; ++b)
            for (std::uint64_t a = 0; a < k; ++a) {
                std::uint64_t ra = (b1 ? (k - a) % k : a);
                ra = (ra + a1) % k;
                std::uint64_t rb = b ^ b1;
                perm[a + k * b] = static_cast<std::uint32_t>(ra + k * rb + 1);
            }
        return perm;
    };
    const Permutation p1 = left_mult(0, 1), p2 = left_mult(1, 1);
    auto D = std::make_shared<const FiniteGroup>(group_from_permutations({p1, p2}));
    const ElemIndex r1 = D->index_of(cycle_label(p1));
    const ElemIndex r2 = D->index_of(cycle_label(p2));
    auto onto = [&](const GroupPtr& src, ElemIndex r) {
        std::vector<ElemIndex> m(2);
        m[src->identity()] = D->identity();
        m[src->first_nonidentity()] = r;
        return GroupHom(src, D, m);
    };
    return {k, D, r1, r2, onto(G, r1), onto(H, r2)};
}

std::optional<ImageQuotient> image_quotient(const SeparationCertificate& cert, std::size_t cap) {
    std::vector<FpMatrix> gens;
    for (ElemIndex e = 0; e < cert.G->order(); ++e)
        if (e != cert.G->identity()) gens.push_back(cert.images_g[e]);
    for (ElemIndex e = 0; e < cert.H->order(); ++e)
        if (e != cert.H->identity()) gens.push_back(cert.images_h[e]);
    ClosureResult c = matrix_group_closure(gens, cap);
    if (!c.complete) return std::nullopt;

    auto key = [](const FpMatrix& m) {
        std::vector<std::uint64_t> v;
        for (const auto& e : m.entries()) v.push_back(e.value());
        return v;
    };
    std::map<std::vector<std::uint64_t>, ElemIndex> index;
    for (ElemIndex i = 0; i < c.elements.size(); ++i) index.emplace(key(c.elements[i]), i);
    const std::size_t n = c.elements.size();
    std::vector<std::vector<ElemIndex>> table(n, std::vector<ElemIndex>(n));
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < n; ++a) {
        labels.push_back("t" + std::to_string(a));
        for (std::size_t b = 0; b < n; ++b) table[a][b] = index.at(key(c.elements[a] * c.elements[b]));
    }
    auto T = std::make_shared<const FiniteGroup>(FiniteGroup::from_table(std::move(labels), std::move(table)));
    auto factor_map = [&](const GroupPtr& f, const std::vector<FpMatrix>& images) {
        std::vector<ElemIndex> m;
        for (ElemIndex e = 0; e < f->order(); ++e) m.push_back(index.at(key(images[e])));
        return GroupHom(f, T, std::move(m));
    };
    return ImageQuotient{T, factor_map(cert.G, cert.images_g), factor_map(cert.H, cert.images_h)};
}

RefutationCertificate refute(const CoproductCandidate& candidate, ElemIndex g, ElemIndex h, const RunConfig& config,
                             const RefuteOptions& options) {
    const FiniteGroup& F = *candidate.F;
    if (g >= candidate.G->order() || g == candidate.G->identity())
        throw ValidationError("g must be a non-identity element of G");
    if (h >= candidate.H->order() || h == candidate.H->identity())
        throw ValidationError("h must be a non-identity element of H");
    const std::uint64_t m = F.element_order(F.mul(candidate.iota_G(g), candidate.iota_H(h)));

    FreeProduct fp(candidate.G, candidate.H);
    RefutationCertificate out{candidate, g, h, m, build_quotient(fp, g, h, m, config), {}};

    // f(ι_G(g)ι_H(h)) has order dividing m; the certificate shows the image
    // of gh has order > m.
    {
        bool ok = out.separation.checks.size() == m;
        for (const auto& c : out.separation.checks) ok = ok && c.nonidentity;
        out.oracle_checks.push_back({"order-obstruction", ok,
                                     "order of ι_G(g)ι_H(h) in F is " + std::to_string(m) +
                                         "; order of q(gh) exceeds " + std::to_string(m)});
    }

    const EnumerationBudget budget{16, options.enumeration_cap};
    if (auto quotient = F.order() <= budget.max_source ? image_quotient(out.separation, options.enumeration_cap)
                                                       : std::nullopt) {
        MediatingResult r = check_mediating_empty(candidate, quotient->f_G, quotient->f_H, budget);
        out.oracle_checks.push_back({"exhaustive-enumeration", r.empty,
                                     "Hom(F, T) with |T| = " + std::to_string(quotient->T->order()) +
                                         (r.empty ? " has no mediating map" : " has a mediating map")});
    }

    if (options.dihedral) {
        DihedralOracle d = dihedral_oracle(m + 1, candidate.G, candidate.H);
        const FiniteGroup& D = *d.group;
        const std::uint64_t order = D.element_order(D.mul(d.f_G(g), d.f_H(h)));
        bool ok = order == m + 1;
        std::string detail = "D_" + std::to_string(m + 1) + ": f_G(g)f_H(h) has order " + std::to_string(order);
        if (F.order() <= budget.max_source && D.order() <= budget.max_target) {
            MediatingResult r = check_mediating_empty(candidate, d.f_G, d.f_H, budget);
            ok = ok && r.empty;
            detail += r.empty ? "; no mediating map" : "; mediating map found";
        }
        out.oracle_checks.push_back({"dihedral", ok, detail});
    }
    return out;
}

namespace {

GroupHom hom_from_json(const Json& j, const GroupPtr& src, const GroupPtr& tgt, const std::string& what) {
    if (!j.is_object()) throw ValidationError(what + " must map source labels to target labels");
    std::vector<ElemIndex> m(src->order());
    if (j.size() != src->order()) throw ValidationError(what + " must list every element of its source");
    for (ElemIndex e = 0; e < src->order(); ++e) {
        if (!j.contains(src->label(e))) throw ValidationError(what + " has no image for " + src->label(e));
        const auto& v = j.at(src->label(e));
        if (!v.is_string()) throw ValidationError(what + " images must be labels");
        m[e] = tgt->index_of(v.get<std::string>());
    }
    try {
        return GroupHom(src, tgt, std::move(m));
    } catch (const ValidationError& e) {
        throw ValidationError(what + ": " + e.what());
    }
}

Json hom_to_json(const GroupHom& f) {
    Json o = Json::object();
    for (ElemIndex e = 0; e < f.source()->order(); ++e) o[f.source()->label(e)] = f.target()->label(f(e));
    return o;
}

}  // namespace

CoproductCandidate candidate_from_json(const Json& j) {
    if (!j.is_object()) throw ValidationError("candidate must be a JSON object");
    for (const char* key : {"G", "H", "F", "iota_G", "iota_H"})
        if (!j.contains(key)) throw ValidationError(std::string("candidate is missing \"") + key + "\"");
    auto G = std::make_shared<const FiniteGroup>(group_from_json(j.at("G")));
    auto H = std::make_shared<const FiniteGroup>(group_from_json(j.at("H")));
    auto F = std::make_shared<const FiniteGroup>(group_from_json(j.at("F")));
    GroupHom iG = hom_from_json(j.at("iota_G"), G, F, "iota_G");
    GroupHom iH = hom_from_json(j.at("iota_H"), H, F, "iota_H");
    return CoproductCandidate::make(G, H, F, std::move(iG), std::move(iH));
}

Json candidate_to_json(const CoproductCandidate& c) {
    Json j;
    j["G"] = group_to_json(*c.G);
    j["H"] = group_to_json(*c.H);
    j["F"] = group_to_json(*c.F);
    j["iota_G"] = hom_to_json(c.iota_G);
    j["iota_H"] = hom_to_json(c.iota_H);
    return j;
}

Json refutation_to_json(const RefutationCertificate& r) {
    Json j;
    j["candidate"] = candidate_to_json(r.candidate);
    j["g"] = r.candidate.G->label(r.g);
    j["h"] = r.candidate.H->label(r.h);
    j["m"] = r.m;
    j["separation"] = certificate_to_json(r.separation);
    Json checks = Json::array();
    for (const auto& c : r.oracle_checks) {
        Json o;
        o["name"] = c.name;
        o["passed"] = c.passed;
        o["detail"] = c.detail;
        checks.push_back(std::move(o));
    }
    j["oracle_checks"] = std::move(checks);
    Json conclusion;
    conclusion["order_in_F"] = r.m;
    conclusion["order_in_quotient_exceeds"] = r.m;
    conclusion["mediating_morphism_exists"] = false;
    j["conclusion"] = std::move(conclusion);
    return j;
}

VerifyReport verify_refutation(const Json& j) {
    VerifyReport report;
    auto add = [&](const std::string& name, const std::function<std::string()>& run) {
        if (!report.passed()) return;
        VerifyReport::Check c{name, false, ""};
        try {
            c.detail = run();
            c.passed = true;
        } catch (const Error& e) {
            c.detail = e.what();
        } catch (const nlohmann::json::exception& e) {
            c.detail = e.what();
        }
        report.checks.push_back(c);
    };
    add("candidate", [&] {
        CoproductCandidate c = candidate_from_json(j.at("candidate"));
        const ElemIndex g = c.G->index_of(j.at("g").get<std::string>());
        const ElemIndex h = c.H->index_of(j.at("h").get<std::string>());
        const std::uint64_t m = c.F->element_order(c.F->mul(c.iota_G(g), c.iota_H(h)));
        if (j.at("m").get<std::uint64_t>() != m)
            throw VerificationError("recorded m differs from the order of ι_G(g)ι_H(h) = " + std::to_string(m));
        const Json& sep = j.at("separation");
        if (sep.at("kind") != "quotient" || sep.at("m") != j.at("m") || sep.at("g") != j.at("g") ||
            sep.at("h") != j.at("h"))
            throw VerificationError("separation does not certify order > m for gh");
        if (!(group_from_json(sep.at("groups").at("G")) == *c.G) ||
            !(group_from_json(sep.at("groups").at("H")) == *c.H))
            throw VerificationError("separation groups differ from the candidate's");
        return "m = " + std::to_string(m);
    });
    if (!report.passed()) return report;
    VerifyReport inner = verify_certificate(j.at("separation"));
    for (auto& c : inner.checks) {
        c.name = "separation/" + c.name;
        report.checks.push_back(std::move(c));
    }
    return report;
}

}  // namespace coprod
