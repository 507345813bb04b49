#include "coprod/group/word.hpp"

#include "coprod/errors.hpp"

namespace coprod {

FreeProduct::FreeProduct(GroupPtr G, GroupPtr H) : g_(std::move(G)), h_(std::move(H)) {
    if (!g_ || !h_) throw ValidationError("free product needs two groups");
}

Word FreeProduct::normalize(const std::vector<Syllable>& raw) const {
    std::vector<Syllable> stack;
    stack.reserve(raw.size());
    for (const Syllable& s : raw) {
        const FiniteGroup& f = factor(s.side);
        if (s.element >= f.order())
            throw ValidationError(std::string("element index out of range for factor ") + side_name(s.side));
        if (s.element == f.identity()) continue;
        if (!stack.empty() && stack.back().side == s.side) {
            ElemIndex merged = f.mul(stack.back().element, s.element);
            stack.pop_back();
            if (merged != f.identity()) stack.push_back({s.side, merged});
        } else {
            stack.push_back(s);
        }
    }
    return Word(std::move(stack));
}

Word FreeProduct::mul(const Word& a, const Word& b) const {
    std::vector<Syllable> raw = a.s_;
    raw.insert(raw.end(), b.s_.begin(), b.s_.end());
    return normalize(raw);
}

Word FreeProduct::inv(const Word& a) const {
    std::vector<Syllable> r;
    r.reserve(a.length());
    for (auto it = a.s_.rbegin(); it != a.s_.rend(); ++it) r.push_back({it->side, factor(it->side).inv(it->element)});
    return Word(std::move(r));
}

Word FreeProduct::pow(const Word& a, std::uint64_t k) const {
    Word result;
    Word base = a;
    while (k) {
        if (k & 1) result = mul(result, base);
        k >>= 1;
        if (k) base = mul(base, base);
    }
    return result;
}

Word FreeProduct::commutator(const Word& a, const Word& b) const {
    return mul(mul(a, b), mul(inv(a), inv(b)));
}

void FreeProduct::for_each_reduced_word(std::size_t max_len,
                                        const std::function<void(const Word&)>& visit) const {
    visit(Word());
    std::vector<Syllable> buf;
    // Depth-first fill of a fixed-length buffer.
    std::function<void(std::size_t, Side)> fill = [&](std::size_t remaining, Side side) {
        if (remaining == 0) {
            visit(Word(buf));
            return;
        }
        const FiniteGroup& f = factor(side);
        for (ElemIndex e = 0; e < f.order(); ++e) {
            if (e == f.identity()) continue;
            buf.push_back({side, e});
            fill(remaining - 1, other(side));
            buf.pop_back();
        }
    };
    for (std::size_t len = 1; len <= max_len; ++len) {
        fill(len, Side::G);
        fill(len, Side::H);
    }
}

std::vector<Word> FreeProduct::enumerate_reduced_words(std::size_t max_len) const {
    std::vector<Word> out;
    for_each_reduced_word(max_len, [&](const Word& w) { out.push_back(w); });
    return out;
}

std::uint64_t FreeProduct::count_reduced_words(std::size_t max_len) const {
    const std::uint64_t a = g_->order() - 1, b = h_->order() - 1;
    std::uint64_t total = 1;
    for (std::size_t len = 1; len <= max_len; ++len) {
        // Alternating products starting from each side.
        std::uint64_t from_g = 1, from_h = 1;
        for (std::size_t i = 0; i < len; ++i) {
            from_g *= (i % 2 == 0) ? a : b;
            from_h *= (i % 2 == 0) ? b : a;
        }
        total += from_g + from_h;
    }
    return total;
}

std::string FreeProduct::format(const Word& w) const {
    if (w.is_identity()) return "1";
    std::string out;
    for (const auto& s : w.syllables()) {
        if (!out.empty()) out += "·";
        out += std::string(side_name(s.side)) + ":" + factor(s.side).label(s.element);
    }
    return out;
}

}  // namespace coprod
