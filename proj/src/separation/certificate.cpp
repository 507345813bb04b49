#include "coprod/separation/certificate.hpp"

#include "coprod/errors.hpp"

#include <functional>
#include <memory>

namespace coprod {

namespace {

Json matrix_to_json(const FpMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).value());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json images_to_json(const FiniteGroup& f, const std::vector<FpMatrix>& images) {
    Json o = Json::object();
    for (ElemIndex e = 0; e < f.order(); ++e) o[f.label(e)] = matrix_to_json(images[e]);
    return o;
}

Json check_to_json(const PowerCheck& c) {
    Json o;
    o["k"] = c.k;
    o["nonidentity"] = c.nonidentity;
    return o;
}

}  // namespace

Json certificate_to_json(const SeparationCertificate& cert) {
    const FreeProduct fp(cert.G, cert.H);
    Json j;
    j["kind"] = cert.kind == SeparationCertificate::Kind::Quotient ? "quotient" : "separate";
    j["groups"]["G"] = group_to_json(*cert.G);
    j["groups"]["H"] = group_to_json(*cert.H);
    j["word"] = word_to_json(fp, cert.word);
    if (cert.kind == SeparationCertificate::Kind::Quotient) {
        j["g"] = cert.G->label(*cert.g);
        j["h"] = cert.H->label(*cert.h);
        j["m"] = *cert.m;
    }
    j["conjugator"] = cert.conjugator;
    Json rejected = Json::array();
    for (const auto& r : cert.rejected) {
        Json o;
        o["conjugator"] = r.conjugator;
        o["word"] = r.word;
        o["reason"] = r.reason;
        rejected.push_back(std::move(o));
    }
    j["rejected_conjugators"] = std::move(rejected);
    j["seed"] = cert.seed;
    j["verify_len"] = cert.verify_len;
    j["s"] = cert.s.str();
    j["p"] = cert.p;
    j["D"] = poly_to_json(cert.D);
    j["D_s"] = cert.D_s.get_str();
    Json N = Json::object();
    for (const auto& [k, poly] : cert.N) N[std::to_string(k)] = poly_to_json(poly);
    j["N"] = std::move(N);
    j["images_mod_p"]["G"] = images_to_json(*cert.G, cert.images_g);
    j["images_mod_p"]["H"] = images_to_json(*cert.H, cert.images_h);
    j["target_image_mod_p"] = matrix_to_json(*cert.target_image);
    Json checks = Json::array();
    for (const auto& c : cert.checks) checks.push_back(check_to_json(c));
    j["checks"] = std::move(checks);
    j["factorial_check"] = cert.factorial_check ? check_to_json(*cert.factorial_check) : Json(nullptr);
    j["closure_size"] = cert.closure_size ? Json(*cert.closure_size) : Json(nullptr);
    return j;
}

bool VerifyReport::passed() const { return first_failure() == nullptr; }

const VerifyReport::Check* VerifyReport::first_failure() const {
    for (const auto& c : checks)
        if (!c.passed) return &c;
    return nullptr;
}

namespace {

// State accumulated while replaying; each stage fills what later ones use.
struct Replay {
    const Json& j;
    std::shared_ptr<FiniteGroup> G, H;
    std::unique_ptr<FreeProduct> fp;
    Word word;
    std::uint64_t p = 0;
    std::size_t n = 0;
    std::vector<FpMatrix> images_g, images_h;
    std::optional<FpMatrix> target;
};

FpMatrix parse_matrix(const Json& j, std::size_t n, std::uint64_t p, const std::string& what) {
    if (!j.is_array() || j.size() != n) throw VerificationError(what + " is not " + std::to_string(n) + " rows");
    std::vector<FpElem> v;
    v.reserve(n * n);
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != n)
            throw VerificationError(what + " has a row of the wrong length");
        for (const auto& x : row) {
            if (!x.is_number_unsigned() || x.get<std::uint64_t>() >= p)
                throw VerificationError(what + " has an entry outside [0, p)");
            v.emplace_back(x.get<std::uint64_t>(), p);
        }
    }
    return FpMatrix(n, n, std::move(v));
}

std::vector<FpMatrix> parse_images(const Json& j, const FiniteGroup& f, std::size_t n, std::uint64_t p,
                                   const std::string& side) {
    if (!j.is_object() || j.size() != f.order())
        throw VerificationError("images for " + side + " must list every element exactly once");
    std::vector<FpMatrix> out;
    for (ElemIndex e = 0; e < f.order(); ++e) {
        if (!j.contains(f.label(e))) throw VerificationError("no image for " + side + ":" + f.label(e));
        out.push_back(parse_matrix(j.at(f.label(e)), n, p, "image of " + side + ":" + f.label(e)));
    }
    return out;
}

void check_factor(const FiniteGroup& f, const std::vector<FpMatrix>& images, const std::string& side) {
    if (!images[f.identity()].is_identity())
        throw VerificationError(side + " identity does not map to I");
    for (ElemIndex a = 0; a < f.order(); ++a)
        for (ElemIndex b = 0; b < f.order(); ++b)
            if (!(images[a] * images[b] == images[f.mul(a, b)]))
                throw VerificationError("image(" + f.label(a) + ")·image(" + f.label(b) + ") ≠ image(" +
                                        f.label(f.mul(a, b)) + ") in " + side);
}

}  // namespace

VerifyReport verify_certificate(const Json& j) {
    VerifyReport report;
    Replay r{j, {}, {}, {}, {}, 0, 0, {}, {}, {}};

    const std::vector<std::pair<std::string, std::function<std::string()>>> stages = {
        {"schema",
         [&] {
             for (const char* key : {"kind", "groups", "word", "conjugator", "s", "p", "D_s", "images_mod_p",
                                     "target_image_mod_p", "checks"})
                 if (!j.contains(key)) throw VerificationError(std::string("missing field \"") + key + "\"");
             if (!j.at("p").is_number_unsigned()) throw VerificationError("p must be a non-negative integer");
             if (!j.at("D_s").is_string()) throw VerificationError("D_s must be a decimal string");
             if (!j.at("checks").is_array() || j.at("checks").empty())
                 throw VerificationError("checks must be a nonempty array");
             return std::string("required fields present");
         }},
        {"group-tables",
         [&] {
             r.G = std::make_shared<FiniteGroup>(group_from_json(j.at("groups").at("G")));
             r.H = std::make_shared<FiniteGroup>(group_from_json(j.at("groups").at("H")));
             r.fp = std::make_unique<FreeProduct>(r.G, r.H);
             r.word = word_from_json(*r.fp, j.at("word"));
             if (r.word.is_identity()) throw VerificationError("certified word is empty");
             r.n = r.G->order() + r.H->order();
             return "|G| = " + std::to_string(r.G->order()) + ", |H| = " + std::to_string(r.H->order());
         }},
        {"prime-validity",
         [&] {
             r.p = j.at("p").get<std::uint64_t>();
             if (r.p >= (1ULL << 32) || !is_prime(r.p))
                 throw VerificationError("p = " + std::to_string(r.p) + " is not a supported prime");
             BigInt Ds;
             if (Ds.set_str(j.at("D_s").get<std::string>(), 10) != 0 || Ds < 1)
                 throw VerificationError("D_s is not a positive integer");
             if (mpz_divisible_ui_p(Ds.get_mpz_t(), r.p))
                 throw VerificationError("p = " + std::to_string(r.p) + " divides D_s = " + Ds.get_str());
             return "p = " + std::to_string(r.p) + " is prime and does not divide D_s";
         }},
        {"image-shape",
         [&] {
             r.images_g = parse_images(j.at("images_mod_p").at("G"), *r.G, r.n, r.p, "G");
             r.images_h = parse_images(j.at("images_mod_p").at("H"), *r.H, r.n, r.p, "H");
             r.target = parse_matrix(j.at("target_image_mod_p"), r.n, r.p, "target image");
             return std::to_string(r.n) + "x" + std::to_string(r.n) + " matrices over Z/" + std::to_string(r.p);
         }},
        {"product",
         [&] {
             FpMatrix acc = FpMatrix::identity(r.n, FpElem(0, r.p));
             for (const auto& s : r.word.syllables())
                 acc = acc * (s.side == Side::G ? r.images_g[s.element] : r.images_h[s.element]);
             if (!(acc == *r.target))
                 throw VerificationError("product of syllable images differs from the recorded target image");
             return std::string("target image equals the product of its syllable images");
         }},
        {"factor-homomorphism",
         [&] {
             check_factor(*r.G, r.images_g, "G");
             check_factor(*r.H, r.images_h, "H");
             return std::string("both factor maps respect their Cayley tables");
         }},
        {"inequations",
         [&] {
             const auto& checks = j.at("checks");
             std::vector<std::uint64_t> ks;
             for (const auto& c : checks) {
                 if (!c.contains("k") || !c.at("k").is_number_unsigned() || !c.contains("nonidentity"))
                     throw VerificationError("malformed check entry");
                 std::uint64_t k = c.at("k").get<std::uint64_t>();
                 if (k == 0) throw VerificationError("check with k = 0");
                 if (c.at("nonidentity") != true)
                     throw VerificationError("check k = " + std::to_string(k) + " does not assert an inequation");
                 if (r.target->pow(k).is_identity())
                     throw VerificationError("w^" + std::to_string(k) + " maps to I mod p");
                 ks.push_back(k);
             }
             if (j.at("kind") == "quotient") {
                 if (!j.contains("m") || !j.at("m").is_number_unsigned())
                     throw VerificationError("quotient certificate without m");
                 const std::uint64_t m = j.at("m").get<std::uint64_t>();
                 if (ks.size() != m) throw VerificationError("quotient certificate must check k = 1..m");
                 for (std::uint64_t k = 1; k <= m; ++k)
                     if (ks[k - 1] != k) throw VerificationError("quotient certificate must check k = 1..m");
                 const auto g = r.G->index_of(j.at("g").get<std::string>());
                 const auto h = r.H->index_of(j.at("h").get<std::string>());
                 if (!(r.word == r.fp->normalize({{Side::G, g}, {Side::H, h}})))
                     throw VerificationError("quotient word is not gh");
             }
             return std::to_string(ks.size()) + " inequation(s) hold";
         }},
        {"factorial",
         [&] {
             if (!j.contains("factorial_check") || j.at("factorial_check").is_null())
                 return std::string("not recorded");
             const auto& c = j.at("factorial_check");
             const std::uint64_t k = c.at("k").get<std::uint64_t>();
             if (c.at("nonidentity") != true || r.target->pow(k).is_identity())
                 throw VerificationError("w^" + std::to_string(k) + " maps to I mod p");
             return "w^" + std::to_string(k) + " ≠ I";
         }},
        {"closure",
         [&] {
             if (!j.contains("closure_size") || j.at("closure_size").is_null())
                 return std::string("not recorded");
             const std::size_t claimed = j.at("closure_size").get<std::size_t>();
             std::vector<FpMatrix> gens;
             for (ElemIndex e = 0; e < r.G->order(); ++e)
                 if (e != r.G->identity()) gens.push_back(r.images_g[e]);
             for (ElemIndex e = 0; e < r.H->order(); ++e)
                 if (e != r.H->identity()) gens.push_back(r.images_h[e]);
             ClosureResult c = matrix_group_closure(gens, claimed + 1);
             if (!c.complete || c.size != claimed)
                 throw VerificationError("closure size " + std::to_string(claimed) + " does not replay");
             return "image group has " + std::to_string(claimed) + " elements";
         }},
    };

    for (const auto& [name, run] : stages) {
        VerifyReport::Check check{name, false, ""};
        try {
            check.detail = run();
            check.passed = true;
        } catch (const Error& e) {
            check.detail = e.what();
        } catch (const nlohmann::json::exception& e) {
            check.detail = e.what();
        }
        report.checks.push_back(check);
        if (!check.passed) break;
    }
    return report;
}

}  // namespace coprod
