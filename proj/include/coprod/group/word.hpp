#pragma once

#include "coprod/group/finite_group.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace coprod {

/// Which free factor a syllable belongs to. Tags are explicit even when the
/// two factors are isomorphic.
enum class Side : std::uint8_t { G, H };

inline Side other(Side s) { return s == Side::G ? Side::H : Side::G; }
inline const char* side_name(Side s) { return s == Side::G ? "G" : "H"; }

struct Syllable {
    Side side;
    ElemIndex element;
    friend bool operator==(const Syllable&, const Syllable&) = default;
    friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

/// An element of G*H in reduced form: no identity syllables, strictly
/// alternating sides. The empty word is the identity. Only FreeProduct
/// produces Words, so every Word is reduced.
class Word {
public:
    Word() = default;

    [[nodiscard]] const std::vector<Syllable>& syllables() const { return s_; }
    [[nodiscard]] std::size_t length() const { return s_.size(); }
    [[nodiscard]] bool is_identity() const { return s_.empty(); }

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    friend class FreeProduct;
    explicit Word(std::vector<Syllable> s) : s_(std::move(s)) {}
    std::vector<Syllable> s_;
};

/// The free product G*H of two finite groups and its word arithmetic.
class FreeProduct {
public:
    FreeProduct(GroupPtr G, GroupPtr H);

    [[nodiscard]] const FiniteGroup& G() const { return *g_; }
    [[nodiscard]] const FiniteGroup& H() const { return *h_; }
    [[nodiscard]] const GroupPtr& G_ptr() const { return g_; }
    [[nodiscard]] const GroupPtr& H_ptr() const { return h_; }
    [[nodiscard]] const FiniteGroup& factor(Side s) const { return s == Side::G ? *g_ : *h_; }

    /// Multiplies adjacent same-side syllables and drops identities until the
    /// reduced alternating form is reached. Throws ValidationError on an
    /// out-of-range element index.
    [[nodiscard]] Word normalize(const std::vector<Syllable>& raw) const;
    [[nodiscard]] Word syllable(Side side, ElemIndex element) const { return normalize({{side, element}}); }

    [[nodiscard]] Word mul(const Word& a, const Word& b) const;
    [[nodiscard]] Word inv(const Word& a) const;
    [[nodiscard]] Word pow(const Word& a, std::uint64_t k) const;
    /// a b a⁻¹ b⁻¹
    [[nodiscard]] Word commutator(const Word& a, const Word& b) const;

    /// Visits every reduced word of syllable length <= max_len exactly once,
    /// shortest first; within a length, G-initial words come first and
    /// syllables run in element-index order.
    void for_each_reduced_word(std::size_t max_len, const std::function<void(const Word&)>& visit) const;
    [[nodiscard]] std::vector<Word> enumerate_reduced_words(std::size_t max_len) const;
    /// Closed-form count of reduced words of length <= max_len.
    [[nodiscard]] std::uint64_t count_reduced_words(std::size_t max_len) const;

    /// e.g. "G:a·H:(1 2)" using factor labels; "1" for the identity.
    [[nodiscard]] std::string format(const Word& w) const;

private:
    GroupPtr g_;
    GroupPtr h_;
};

}  // namespace coprod
