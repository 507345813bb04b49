#include "coprod/separation/pipeline.hpp"

#include <unordered_map>

namespace coprod {

RatMatrix RationalSpecialization::apply(const Word& w) const {
    const std::size_t n = images_g.front().rows();
    RatMatrix acc = RatMatrix::identity(n);
    for (const auto& x : w.syllables()) acc = acc * image(x);
    return acc;
}

FpMatrix ModularSpecialization::apply(const Word& w) const {
    const std::size_t n = images_g.front().rows();
    FpMatrix acc = FpMatrix::identity(n, FpElem(0, p));
    for (const auto& x : w.syllables()) acc = acc * image(x);
    return acc;
}

Poly compute_D(const FunctionFieldRep& rep) {
    Poly D(1);
    auto absorb = [&](const FuncMatrix& m) {
        for (const auto& e : m.entries())
            if (!e.den().is_one()) D = poly_lcm(D, e.den());
    };
    for (const auto& m : rep.images_g()) absorb(m);
    for (const auto& m : rep.images_h()) absorb(m);
    return D;
}

Poly compute_N(const FuncMatrix& image) {
    const std::size_t n = image.rows();
    std::optional<Poly> g;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            RatFunc e = i == j ? image.at(i, j) - RatFunc(1) : image.at(i, j);
            if (e.is_zero()) continue;
            g = g ? poly_gcd(*g, e.num()) : e.num().monic();
            if (g->is_one()) return *g;
        }
    if (!g) throw ArithmeticError("N is undefined: the image is the identity");
    return *g;
}

Poly compute_N(const FunctionFieldRep& rep, const Word& w) {
    if (w.is_identity()) throw ValidationError("N is undefined for the empty word");
    FuncMatrix img = rep.apply(w);
    if (img.is_identity())
        throw FaithfulnessError("ρ maps " + rep.free_product().format(w) + " to the identity", w,
                                rep.conjugator_spec());
    return compute_N(img);
}

RationalSpecialization specialize(const FunctionFieldRep& rep, const Rat& s) {
    RationalSpecialization out;
    out.s = s;
    out.D_s = 1;
    auto eval = [&](const FuncMatrix& m) {
        RatMatrix r = m.map([&](const RatFunc& f) { return f.eval(s); });
        for (const auto& e : r.entries()) out.D_s = lcm(out.D_s, e.den());
        return r;
    };
    for (const auto& m : rep.images_g()) out.images_g.push_back(eval(m));
    for (const auto& m : rep.images_h()) out.images_h.push_back(eval(m));
    return out;
}

RationalSpecialization choose_specialization(SeparationData& data,
                                             const std::function<bool(const RationalSpecialization&)>& accept) {
    for (long k = 1;; ++k) {
        const Rat s(k);
        bool ok = !data.D.eval(s).is_zero();
        for (std::size_t i = 0; ok && i < data.N.size(); ++i) ok = !data.N[i].eval(s).is_zero();
        if (ok) {
            RationalSpecialization rs = specialize(*data.rep, s);
            if (!accept || accept(rs)) return rs;
        }
        data.excluded.push_back(s);
    }
}

std::uint64_t smallest_admissible_prime(const BigInt& D_s, const std::vector<BigInt>& witness_numerators) {
    for (std::uint64_t p = 2;; p = next_prime(p)) {
        bool ok = !mpz_divisible_ui_p(D_s.get_mpz_t(), p);
        for (std::size_t i = 0; ok && i < witness_numerators.size(); ++i)
            ok = !mpz_divisible_ui_p(witness_numerators[i].get_mpz_t(), p);
        if (ok) return p;
    }
}

ModularSpecialization choose_prime(const RationalSpecialization& spec, const std::vector<RatMatrix>& targets_at_s) {
    ModularSpecialization out;
    std::vector<BigInt> nums;
    for (std::size_t t = 0; t < targets_at_s.size(); ++t) {
        const RatMatrix& m = targets_at_s[t];
        std::optional<Witness> w;
        for (std::size_t i = 0; i < m.rows() && !w; ++i)
            for (std::size_t j = 0; j < m.cols() && !w; ++j) {
                Rat e = i == j ? m.at(i, j) - Rat(1) : m.at(i, j);
                if (!e.is_zero()) w = Witness{i, j, e};
            }
        if (!w) throw PipelineError("target " + std::to_string(t) + " specializes to the identity");
        nums.push_back(w->value.num());
        out.witnesses.push_back(*w);
    }
    out.p = smallest_admissible_prime(spec.D_s, nums);
    auto reduce = [&](const RatMatrix& m) { return m.map([&](const Rat& x) { return rat_to_fp(x, out.p); }); };
    for (const auto& m : spec.images_g) out.images_g.push_back(reduce(m));
    for (const auto& m : spec.images_h) out.images_h.push_back(reduce(m));
    return out;
}

namespace {

struct ValuesHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
        std::uint64_t h = 1469598103934665603ULL;
        for (auto x : v) h = (h ^ x) * 1099511628211ULL;
        return static_cast<std::size_t>(h);
    }
};

std::vector<std::uint32_t> values_of(const FpMatrix& m) {
    std::vector<std::uint32_t> v;
    v.reserve(m.entries().size());
    for (const auto& e : m.entries()) v.push_back(static_cast<std::uint32_t>(e.value()));
    return v;
}

}  // namespace

ClosureResult matrix_group_closure(const std::vector<FpMatrix>& generators, std::size_t cap) {
    ClosureResult out;
    if (generators.empty()) throw ArithmeticError("closure of an empty generating set");
    const FpElem sample = generators.front().at(0, 0);
    std::vector<FpMatrix> elems{FpMatrix::identity(generators.front().rows(), sample)};
    std::unordered_map<std::vector<std::uint32_t>, std::size_t, ValuesHash> seen{{values_of(elems[0]), 0}};
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const auto& g : generators) {
            FpMatrix y = elems[head] * g;
            auto key = values_of(y);
            if (seen.count(key)) continue;
            if (elems.size() >= cap) {
                out.size = elems.size();
                return out;
            }
            seen.emplace(std::move(key), elems.size());
            elems.push_back(std::move(y));
        }
    }
    out.complete = true;
    out.size = elems.size();
    out.elements = std::move(elems);
    return out;
}

namespace {

std::vector<ConjugatorSpec> attempt_order(const RunConfig& config) {
    std::vector<ConjugatorSpec> out{config.conjugator};
    for (std::uint64_t i = 0; out.size() < std::max<std::size_t>(config.retry_limit, 1); ++i) {
        ConjugatorSpec c = ConjugatorSpec::random(config.seed + i);
        if (c != config.conjugator) out.push_back(c);
    }
    return out;
}

bool factor_respects_table(const FiniteGroup& f, const std::vector<FpMatrix>& images) {
    if (!images[f.identity()].is_identity()) return false;
    for (ElemIndex a = 0; a < f.order(); ++a)
        for (ElemIndex b = 0; b < f.order(); ++b)
            if (!(images[a] * images[b] == images[f.mul(a, b)])) return false;
    return true;
}

std::uint64_t factorial(std::uint64_t m) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 2; i <= m; ++i) r *= i;
    return r;
}

// Separates base^k for every k in 1..max_power, plus base^extra_power when
// given (checked by direct evaluation at s rather than through an N).
SeparationCertificate run_pipeline(const FreeProduct& fp, const Word& base, std::uint64_t max_power,
                                   std::optional<std::uint64_t> extra_power, const RunConfig& config) {
    std::vector<RejectedConjugator> rejected;
    for (const ConjugatorSpec& spec : attempt_order(config)) {
        std::shared_ptr<const FunctionFieldRep> rep;
        try {
            rep = std::make_shared<const FunctionFieldRep>(build_function_field_rep(fp, spec, config.verify_len));
        } catch (const FaithfulnessError& e) {
            rejected.push_back({spec.str(), fp.format(e.word()), "collision during injectivity check"});
            continue;
        }

        SeparationData data;
        data.rep = rep;
        data.D = compute_D(*rep);
        const FuncMatrix base_img = rep->apply(base);
        std::optional<FuncMatrix> power;
        bool collided = false;
        for (std::uint64_t k = 1; k <= max_power; ++k) {
            power = k == 1 ? base_img : *power * base_img;
            if (power->is_identity()) {
                rejected.push_back({spec.str(), fp.format(fp.pow(base, k)), "target maps to the identity"});
                collided = true;
                break;
            }
            data.N.push_back(compute_N(*power));
        }
        if (collided) continue;

        auto extra_survives = [&](const RationalSpecialization& rs) {
            return !extra_power || !rs.apply(base).pow(*extra_power).is_identity();
        };
        RationalSpecialization rs = choose_specialization(data, extra_survives);

        std::vector<RatMatrix> at_s;
        const RatMatrix base_s = rs.apply(base);
        for (std::uint64_t k = 1; k <= max_power; ++k) at_s.push_back(k == 1 ? base_s : at_s.back() * base_s);
        if (extra_power) at_s.push_back(base_s.pow(*extra_power));
        for (const auto& m : at_s)
            if (m.is_identity()) throw PipelineError("internal: N(s) ≠ 0 but ρ_s(w) = I");

        ModularSpecialization ms = choose_prime(rs, at_s);
        if (!factor_respects_table(fp.G(), ms.images_g) || !factor_respects_table(fp.H(), ms.images_h))
            throw PipelineError("internal: reduction mod " + std::to_string(ms.p) + " is not a homomorphism");

        SeparationCertificate cert;
        cert.G = fp.G_ptr();
        cert.H = fp.H_ptr();
        cert.word = base;
        cert.conjugator = spec.str();
        cert.seed = config.seed;
        cert.verify_len = config.verify_len;
        cert.rejected = std::move(rejected);
        cert.s = rs.s;
        cert.p = ms.p;
        cert.D = data.D;
        cert.D_s = rs.D_s;
        for (std::uint64_t k = 1; k <= max_power; ++k) cert.N.emplace_back(k, data.N[k - 1]);
        cert.images_g = ms.images_g;
        cert.images_h = ms.images_h;
        const FpMatrix target = ms.apply(base);
        cert.target_image = target;
        FpMatrix acc = target;
        for (std::uint64_t k = 1; k <= max_power; ++k) {
            if (k > 1) acc = acc * target;
            cert.checks.push_back({k, !acc.is_identity()});
            if (acc.is_identity()) throw PipelineError("internal: witness entry vanished mod p");
        }
        if (extra_power) {
            bool ok = !target.pow(*extra_power).is_identity();
            if (!ok) throw PipelineError("internal: factorial power vanished mod p");
            cert.factorial_check = PowerCheck{*extra_power, ok};
        }
        std::vector<FpMatrix> gens;
        for (const auto& x : rep->syllables()) gens.push_back(ms.image(x));
        ClosureResult closure = matrix_group_closure(gens, config.closure_cap);
        if (closure.complete) cert.closure_size = closure.size;
        return cert;
    }
    throw PipelineError("no conjugator separated the target after " + std::to_string(rejected.size()) +
                        " attempts");
}

}  // namespace

SeparationCertificate separate_word(const FreeProduct& fp, const Word& w, const RunConfig& config) {
    if (w.is_identity()) throw ValidationError("cannot separate the empty word from the identity");
    SeparationCertificate cert = run_pipeline(fp, w, 1, std::nullopt, config);
    cert.kind = SeparationCertificate::Kind::Separate;
    return cert;
}

SeparationCertificate build_quotient(const FreeProduct& fp, ElemIndex g, ElemIndex h, std::uint64_t m,
                                     const RunConfig& config) {
    if (m < 1) throw ValidationError("m must be at least 1");
    if (g >= fp.G().order() || g == fp.G().identity()) throw ValidationError("g must be a non-identity element of G");
    if (h >= fp.H().order() || h == fp.H().identity()) throw ValidationError("h must be a non-identity element of H");
    const Word gh = fp.normalize({{Side::G, g}, {Side::H, h}});
    std::optional<std::uint64_t> extra;
    if (m <= config.factorial_check_max_m) extra = factorial(m);
    SeparationCertificate cert = run_pipeline(fp, gh, m, extra, config);
    cert.kind = SeparationCertificate::Kind::Quotient;
    cert.g = g;
    cert.h = h;
    cert.m = m;
    return cert;
}

FunctionFieldRep rebuild_rep(const SeparationCertificate& cert) {
    return build_function_field_rep(FreeProduct(cert.G, cert.H), ConjugatorSpec::parse(cert.conjugator),
                                    cert.verify_len);
}

}  // namespace coprod
