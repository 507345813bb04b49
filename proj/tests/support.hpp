#pragma once

#include "coprod/arith/poly.hpp"
#include "coprod/fixtures.hpp"
#include "coprod/group/finite_group.hpp"
#include "coprod/group/word.hpp"

#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace testing {

using namespace coprod;

inline GroupPtr share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }
inline GroupPtr Z(std::size_t n) { return share(cyclic_group(n)); }

inline Poly random_poly(std::mt19937_64& rng, int max_deg, int height) {
    std::uniform_int_distribution<int> deg(0, max_deg), coef(-height, height);
    std::vector<Rat> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = Rat(coef(rng));
    return Poly(std::move(c));
}

// Schoolbook Euclid over Q, no content removal: an independent gcd.
inline Poly naive_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a;
        while (!r.is_zero() && r.degree() >= b.degree()) {
            Poly q = Poly::monomial(r.lead() / b.lead(), static_cast<std::size_t>(r.degree() - b.degree()));
            r = r - q * b;
        }
        a = b;
        b = r;
    }
    return a.monic();
}

inline Word random_word(const FreeProduct& fp, std::mt19937_64& rng, std::size_t max_raw) {
    std::uniform_int_distribution<std::size_t> len(0, max_raw);
    std::vector<Syllable> raw;
    for (std::size_t i = len(rng); i > 0; --i) {
        Side s = rng() % 2 ? Side::G : Side::H;
        raw.push_back({s, static_cast<ElemIndex>(rng() % fp.factor(s).order())});
    }
    return fp.normalize(raw);
}

// Brute force: all raw syllable sequences up to max_len, normalized, kept
// when the normal form has length <= max_len.
inline std::set<Word> brute_force_words(const FreeProduct& fp, std::size_t max_len) {
    std::set<Word> out;
    std::vector<Syllable> all;
    for (Side s : {Side::G, Side::H})
        for (ElemIndex e = 0; e < fp.factor(s).order(); ++e) all.push_back({s, e});
    std::vector<std::vector<Syllable>> layer{{}};
    out.insert(fp.normalize({}));
    for (std::size_t l = 1; l <= max_len; ++l) {
        std::vector<std::vector<Syllable>> next;
        for (const auto& seq : layer)
            for (const auto& s : all) {
                auto v = seq;
                v.push_back(s);
                Word w = fp.normalize(v);
                if (w.length() <= max_len) out.insert(w);
                next.push_back(std::move(v));
            }
        layer = std::move(next);
    }
    return out;
}

// Order by repeated table multiplication.
inline std::uint64_t order_by_iteration(const FiniteGroup& f, ElemIndex x) {
    std::uint64_t k = 1;
    for (ElemIndex y = x; y != f.identity(); y = f.mul(y, x)) ++k;
    return k;
}

// Every map A → B checked against both Cayley tables.
inline std::size_t count_homs_brute_force(const FiniteGroup& A, const FiniteGroup& B) {
    std::vector<ElemIndex> m(A.order(), 0);
    std::size_t count = 0;
    while (true) {
        bool ok = true;
        for (ElemIndex x = 0; ok && x < A.order(); ++x)
            for (ElemIndex y = 0; ok && y < A.order(); ++y)
                ok = m[A.mul(x, y)] == B.mul(m[x], m[y]);
        count += ok;
        std::size_t i = 0;
        while (i < m.size() && ++m[i] == B.order()) m[i++] = 0;
        if (i == m.size()) return count;
    }
}

}  // namespace testing
