#include "coprod/rep/representation.hpp"

#include "coprod/arith/fp.hpp"

#include <functional>
#include <optional>
#include <random>

namespace coprod {

RegularRep build_regular_rep(const FiniteGroup& G) {
    const std::size_t n = G.order();
    RegularRep rep;
    rep.dim = n;
    rep.images.reserve(n);
    for (ElemIndex x = 0; x < n; ++x) {
        std::vector<Rat> e(n * n);
        for (ElemIndex y = 0; y < n; ++y) e[G.mul(x, y) * n + y] = Rat(1);
        rep.images.emplace_back(n, n, std::move(e));
    }
    return rep;
}

ProductRep build_product_rep(const FiniteGroup& G, const FiniteGroup& H) {
    if (G.is_trivial() || H.is_trivial())
        throw ValidationError("both free factors must be non-trivial groups");
    RegularRep lg = build_regular_rep(G);
    RegularRep lh = build_regular_rep(H);
    ProductRep rep;
    rep.dim = lg.dim + lh.dim;
    const RatMatrix ig = RatMatrix::identity(lg.dim), ih = RatMatrix::identity(lh.dim);
    for (const auto& m : lg.images) rep.imageG.push_back(direct_sum(m, ih));
    for (const auto& m : lh.images) rep.imageH.push_back(direct_sum(ig, m));
    return rep;
}

ConjugatorSpec ConjugatorSpec::parse(const std::string& text) {
    if (text == "all-ones") return {};
    const std::string prefix = "random:";
    if (text.rfind(prefix, 0) == 0 && text.size() > prefix.size()) {
        const std::string digits = text.substr(prefix.size());
        if (digits.find_first_not_of("0123456789") == std::string::npos && digits.size() <= 19)
            return random(std::stoull(digits));
    }
    throw ValidationError("conjugator must be 'all-ones' or 'random:<seed>', got '" + text + "'");
}

std::string ConjugatorSpec::str() const {
    return kind == Kind::AllOnes ? "all-ones" : "random:" + std::to_string(seed);
}

FuncMatrix ConjugatorSpec::matrix(std::size_t n) const {
    std::vector<RatFunc> e(n * n);
    const Poly t = Poly::t();
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            int r = 1;
            if (kind == Kind::Random) r = static_cast<int>(rng() % 3) - 1;
            Poly entry = t * Rat(r);
            if (i == j) entry = entry + Poly(1);
            e[i * n + j] = RatFunc(entry);
        }
    return FuncMatrix(n, n, std::move(e));
}

std::vector<Syllable> FunctionFieldRep::syllables() const {
    std::vector<Syllable> out;
    for (ElemIndex e = 0; e < fp_.G().order(); ++e)
        if (e != fp_.G().identity()) out.push_back({Side::G, e});
    for (ElemIndex e = 0; e < fp_.H().order(); ++e)
        if (e != fp_.H().identity()) out.push_back({Side::H, e});
    return out;
}

FuncMatrix FunctionFieldRep::apply(const Word& w) const {
    if (w.is_identity()) return FuncMatrix::identity(dim_);
    const auto& s = w.syllables();
    FuncMatrix acc = image(s.front());
    for (std::size_t i = 1; i < s.size(); ++i) acc = acc * image(s[i]);
    return acc;
}

namespace {

constexpr std::uint64_t kScreenPrime = 4294967291ULL;

std::optional<FpElem> reduce_at(const RatFunc& f, std::uint64_t s0) {
    auto poly_at = [&](const Poly& p) -> std::optional<FpElem> {
        FpElem acc(0, kScreenPrime), x(s0, kScreenPrime);
        for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
            if (mpz_fdiv_ui(it->den().get_mpz_t(), kScreenPrime) == 0) return std::nullopt;
            acc = acc * x + rat_to_fp(*it, kScreenPrime);
        }
        return acc;
    };
    auto n = poly_at(f.num());
    auto d = poly_at(f.den());
    if (!n || !d || d->is_zero()) return std::nullopt;
    return *n * d->inverse();
}

// Syllable images reduced at t = s0 modulo a large prime, for the first s0
// at which every entry is defined. Reduction is a ring map on the subring
// generated by the entries, so a nonidentity product here proves the
// corresponding ρ(w) is not I.
struct Screen {
    std::vector<std::optional<Matrix<FpElem>>> g, h;
};

Screen build_screen(const FunctionFieldRep& rep) {
    for (std::uint64_t s0 = 2;; ++s0) {
        auto reduce = [&](const FuncMatrix& m) -> std::optional<Matrix<FpElem>> {
            std::vector<FpElem> v;
            v.reserve(m.entries().size());
            for (const auto& x : m.entries()) {
                auto r = reduce_at(x, s0);
                if (!r) return std::nullopt;
                v.push_back(*r);
            }
            return Matrix<FpElem>(m.rows(), m.cols(), std::move(v));
        };
        Screen sc;
        bool ok = true;
        for (const auto& m : rep.images_g()) ok = ok && (sc.g.push_back(reduce(m)), sc.g.back().has_value());
        for (const auto& m : rep.images_h()) ok = ok && (sc.h.push_back(reduce(m)), sc.h.back().has_value());
        if (ok) return sc;
    }
}

}  // namespace

FunctionFieldRep build_function_field_rep(const FreeProduct& fp, const ConjugatorSpec& spec,
                                          std::size_t verify_len) {
    if (verify_len < 2) throw ValidationError("verify length must be at least 2");
    ProductRep base = build_product_rep(fp.G(), fp.H());
    const std::size_t n = base.dim;
    FuncMatrix conj = spec.matrix(n);
    FuncMatrix conj_inv = conj.inverse("conjugator");

    auto lift = [](const RatMatrix& m) { return m.map([](const Rat& x) { return RatFunc(x); }); };
    std::vector<FuncMatrix> g, h;
    for (const auto& m : base.imageG) g.push_back(lift(m));
    for (const auto& m : base.imageH) h.push_back(conj * lift(m) * conj_inv);

    FunctionFieldRep rep(fp, spec, std::move(conj), std::move(g), std::move(h));

    // Depth-first over reduced words, carrying screened prefix products.
    Screen screen = build_screen(rep);
    const Matrix<FpElem> ident = Matrix<FpElem>::identity(n, FpElem(0, kScreenPrime));
    std::vector<Syllable> buf;
    std::function<void(const Matrix<FpElem>&, Side)> extend = [&](const Matrix<FpElem>& prefix, Side side) {
        const FiniteGroup& f = fp.factor(side);
        for (ElemIndex e = 0; e < f.order(); ++e) {
            if (e == f.identity()) continue;
            buf.push_back({side, e});
            const auto& img = side == Side::G ? *screen.g[e] : *screen.h[e];
            Matrix<FpElem> cur = prefix * img;
            if (cur.is_identity()) {
                Word w = fp.normalize(buf);
                if (rep.apply(w).is_identity())
                    throw FaithfulnessError("conjugator " + spec.str() + " maps nonempty word " + fp.format(w) +
                                                " to the identity",
                                            w, spec);
            }
            if (buf.size() < verify_len) extend(cur, other(side));
            buf.pop_back();
        }
    };
    extend(ident, Side::G);
    extend(ident, Side::H);
    rep.verified_length_ = verify_len;
    return rep;
}

}  // namespace coprod
