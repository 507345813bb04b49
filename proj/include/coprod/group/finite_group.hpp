#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace coprod {

using ElemIndex = std::uint32_t;

/// A finite group given by its full Cayley table. Validated on construction;
/// immutable afterwards.
class FiniteGroup {
public:
    /// Validates that `table` is a group law on `labels`: square, Latin,
    /// has a two-sided identity, is associative. Throws ValidationError.
    static FiniteGroup from_table(std::vector<std::string> labels,
                                  std::vector<std::vector<ElemIndex>> table);

    [[nodiscard]] std::size_t order() const { return labels_.size(); }
    [[nodiscard]] ElemIndex identity() const { return identity_; }
    [[nodiscard]] bool is_trivial() const { return order() == 1; }
    [[nodiscard]] ElemIndex mul(ElemIndex a, ElemIndex b) const { return table_[a * order() + b]; }
    [[nodiscard]] ElemIndex inv(ElemIndex a) const { return inverse_[a]; }
    [[nodiscard]] ElemIndex pow(ElemIndex a, std::uint64_t k) const;
    [[nodiscard]] std::uint64_t element_order(ElemIndex a) const;
    [[nodiscard]] bool is_abelian() const;

    [[nodiscard]] const std::string& label(ElemIndex a) const { return labels_.at(a); }
    [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
    [[nodiscard]] std::optional<ElemIndex> find(const std::string& label) const;
    /// Like find() but throws ValidationError for an unknown label.
    [[nodiscard]] ElemIndex index_of(const std::string& label) const;
    /// Rows of the Cayley table.
    [[nodiscard]] std::vector<std::vector<ElemIndex>> table() const;
    /// First non-identity element in index order. Throws on a trivial group.
    [[nodiscard]] ElemIndex first_nonidentity() const;

    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
        return a.labels_ == b.labels_ && a.table_ == b.table_;
    }

private:
    FiniteGroup() = default;
    // Skips the O(n³) associativity check; for laws that are associative by
    // construction (permutation composition, componentwise products).
    static FiniteGroup trusted(std::vector<std::string> labels, std::vector<ElemIndex> flat);
    void finish();

    std::vector<std::string> labels_;
    std::vector<ElemIndex> table_;
    std::vector<ElemIndex> inverse_;
    ElemIndex identity_ = 0;

    friend FiniteGroup group_from_permutations(const std::vector<std::vector<std::uint32_t>>&,
                                               std::size_t);
    friend FiniteGroup direct_product(const FiniteGroup&, const FiniteGroup&);
    friend FiniteGroup cyclic_group(std::size_t);
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// An element of a specific group.
struct GroupElement {
    GroupPtr group;
    ElemIndex index;

    [[nodiscard]] bool is_identity() const { return index == group->identity(); }
    [[nodiscard]] const std::string& label() const { return group->label(index); }
};

std::uint64_t element_order(const GroupElement& x);

/// A permutation of {1..k} in one-line image notation.
using Permutation = std::vector<std::uint32_t>;

/// Cycle notation, e.g. "(1 2)(3 4 5)"; the identity is "()".
std::string cycle_label(const Permutation& perm);

inline constexpr std::size_t kDefaultClosureCap = 10000;

/// Subgroup of Sym(k) generated by `generators` (breadth-first closure).
/// Element 0 is the identity, labels are cycle notation. Composition is
/// (x·y)(i) = x(y(i)). Throws ValidationError on a non-bijection or when the
/// closure exceeds `cap` elements.
FiniteGroup group_from_permutations(const std::vector<Permutation>& generators,
                                    std::size_t cap = kDefaultClosureCap);

/// G × H with componentwise law; element (a, b) has index a·|H| + b and
/// label "(a,b)".
FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& H);

/// Cyclic group Z/n with labels "e", "a", "a^2", ...
FiniteGroup cyclic_group(std::size_t n);

}  // namespace coprod
