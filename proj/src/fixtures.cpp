#include "coprod/fixtures.hpp"

#include "coprod/errors.hpp"
#include "coprod/refute/refutation.hpp"
#include "coprod/separation/certificate.hpp"

namespace coprod {

namespace {

GroupPtr share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

GroupPtr s3() { return share(group_from_permutations({{2, 1, 3}, {2, 3, 1}})); }
GroupPtr d4() { return share(group_from_permutations({{2, 3, 4, 1}, {1, 4, 3, 2}})); }
GroupPtr q8() { return share(group_from_permutations({{2, 3, 4, 1, 6, 7, 8, 5}, {5, 8, 7, 6, 3, 2, 1, 4}})); }
GroupPtr klein() { return share(direct_product(cyclic_group(2), cyclic_group(2))); }

// Among all pairs (ι_G, ι_H), the first maximizing the order of
// ι_G(g)·ι_H(h) for the default g, h.
CoproductCandidate representative_candidate(const GroupPtr& G, const GroupPtr& H, const GroupPtr& F) {
    const ElemIndex g = G->first_nonidentity(), h = H->first_nonidentity();
    const auto homs_g = enumerate_homs(G, F), homs_h = enumerate_homs(H, F);
    std::size_t best_a = 0, best_b = 0;
    std::uint64_t best = 0;
    for (std::size_t a = 0; a < homs_g.size(); ++a)
        for (std::size_t b = 0; b < homs_h.size(); ++b) {
            std::uint64_t m = F->element_order(F->mul(homs_g[a](g), homs_h[b](h)));
            if (m > best) best = m, best_a = a, best_b = b;
        }
    return CoproductCandidate::make(G, H, F, homs_g[best_a], homs_h[best_b]);
}

}  // namespace

GroupPtr fixture_group(const std::string& name) {
    if (name == "z2") return share(cyclic_group(2));
    if (name == "z3") return share(cyclic_group(3));
    if (name == "s3") return s3();
    if (name == "klein") return klein();
    if (name == "d4") return d4();
    throw ValidationError("unknown fixture group \"" + name + "\"");
}

std::vector<std::pair<std::string, std::string>> fixture_pairs() {
    return {{"z2", "z2"}, {"z2", "z3"}, {"z3", "z3"}, {"s3", "z2"}};
}

std::vector<NamedGroup> small_groups() {
    return {
        {"z1", share(cyclic_group(1))},
        {"z2", share(cyclic_group(2))},
        {"z3", share(cyclic_group(3))},
        {"z4", share(cyclic_group(4))},
        {"klein", klein()},
        {"z5", share(cyclic_group(5))},
        {"z6", share(cyclic_group(6))},
        {"s3", s3()},
        {"z7", share(cyclic_group(7))},
        {"z8", share(cyclic_group(8))},
        {"z4xz2", share(direct_product(cyclic_group(4), cyclic_group(2)))},
        {"z2xz2xz2", share(direct_product(*klein(), cyclic_group(2)))},
        {"d4", d4()},
        {"q8", q8()},
    };
}

FixtureSet generate_fixtures(const RunConfig& config, const FixtureOptions& options) {
    FixtureSet out;
    for (const char* name : {"z2", "z3", "s3", "klein", "d4"})
        out.emplace_back(std::filesystem::path("groups") / (std::string(name) + ".json"),
                         group_to_json(*fixture_group(name)));

    for (const auto& [gn, hn] : fixture_pairs()) {
        const std::string pair = gn + "_" + hn;
        FreeProduct fp(fixture_group(gn), fixture_group(hn));
        const ElemIndex g = fp.G().first_nonidentity(), h = fp.H().first_nonidentity();
        for (std::uint64_t m = 1; m <= options.max_m; ++m)
            out.emplace_back(std::filesystem::path("quotient") / (pair + "_m" + std::to_string(m) + ".json"),
                             certificate_to_json(build_quotient(fp, g, h, m, config)));
        std::size_t i = 0;
        fp.for_each_reduced_word(options.separate_max_len, [&](const Word& w) {
            if (w.is_identity()) return;
            out.emplace_back(std::filesystem::path("separate") / (pair + "_" + std::to_string(i++) + ".json"),
                             certificate_to_json(separate_word(fp, w, config)));
        });
    }

    for (const auto& [gn, hn] : fixture_pairs()) {
        const GroupPtr G = fixture_group(gn), H = fixture_group(hn);
        for (const auto& F : small_groups()) {
            CoproductCandidate c = representative_candidate(G, H, F.group);
            const std::string stem = gn + "_" + hn + "_to_" + F.name;
            out.emplace_back(std::filesystem::path("candidates") / (stem + ".json"), candidate_to_json(c));
            RefuteOptions opts;
            opts.dihedral = G->order() == 2 && H->order() == 2;
            out.emplace_back(std::filesystem::path("refute") / (stem + ".json"),
                             refutation_to_json(refute(c, G->first_nonidentity(), H->first_nonidentity(),
                                                       config, opts)));
        }
    }
    return out;
}

void write_fixtures(const std::filesystem::path& dir, const FixtureSet& files) {
    for (const auto& [rel, j] : files) write_json_file(dir / rel, j);
}

}  // namespace coprod
