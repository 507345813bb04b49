#pragma once

#include "coprod/group/finite_group.hpp"
#include "coprod/io/json_io.hpp"
#include "coprod/separation/certificate.hpp"
#include "coprod/separation/pipeline.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace coprod {

struct EnumerationBudget {
    std::size_t max_source = 16;
    std::size_t max_target = 64;
};

/// A homomorphism between finite groups, checked on every pair of elements
/// at construction.
class GroupHom {
public:
    /// Throws ValidationError unless `map` is a homomorphism source → target.
    GroupHom(GroupPtr source, GroupPtr target, std::vector<ElemIndex> map);

    [[nodiscard]] const GroupPtr& source() const { return src_; }
    [[nodiscard]] const GroupPtr& target() const { return tgt_; }
    [[nodiscard]] ElemIndex operator()(ElemIndex x) const { return map_.at(x); }
    [[nodiscard]] const std::vector<ElemIndex>& map() const { return map_; }

    /// The trivial homomorphism.
    static GroupHom trivial(GroupPtr source, GroupPtr target);
    static GroupHom identity(GroupPtr group);

    friend bool operator==(const GroupHom& a, const GroupHom& b) {
        return *a.src_ == *b.src_ && *a.tgt_ == *b.tgt_ && a.map_ == b.map_;
    }

private:
    struct Trusted {};
    GroupHom(GroupPtr s, GroupPtr t, std::vector<ElemIndex> m, Trusted)
        : src_(std::move(s)), tgt_(std::move(t)), map_(std::move(m)) {}
    friend GroupHom compose(const GroupHom&, const GroupHom&);
    friend std::vector<GroupHom> enumerate_homs(const GroupPtr&, const GroupPtr&, const EnumerationBudget&);

    GroupPtr src_;
    GroupPtr tgt_;
    std::vector<ElemIndex> map_;
};

/// after ∘ before. Throws ValidationError when the groups do not chain.
GroupHom compose(const GroupHom& after, const GroupHom& before);

/// A candidate coproduct (F, ι_G, ι_H) in the category of finite groups.
struct CoproductCandidate {
    GroupPtr G;
    GroupPtr H;
    GroupPtr F;
    GroupHom iota_G;
    GroupHom iota_H;

    /// Checks that ι_G : G → F and ι_H : H → F.
    static CoproductCandidate make(GroupPtr G, GroupPtr H, GroupPtr F, GroupHom iota_G, GroupHom iota_H);
};

/// Every homomorphism A → B, by backtracking over images of a generating
/// set of A. Throws PipelineError when the budget is exceeded.
std::vector<GroupHom> enumerate_homs(const GroupPtr& A, const GroupPtr& B, const EnumerationBudget& budget = {});

struct MediatingResult {
    bool empty = true;
    std::optional<GroupHom> witness;
};

/// Whether no f : F → T satisfies f∘ι_G = f_G and f∘ι_H = f_H.
MediatingResult check_mediating_empty(const CoproductCandidate& candidate, const GroupHom& f_G, const GroupHom& f_H,
                                      const EnumerationBudget& budget = {});

/// D_k of order 2k with the two reflections r1 = x ↦ -x and r2 = x ↦ 1 - x,
/// whose product is a rotation of order k, plus the maps sending the
/// generator of each order-2 factor to r1 and r2.
struct DihedralOracle {
    std::uint64_t k = 0;
    GroupPtr group;
    ElemIndex r1 = 0;
    ElemIndex r2 = 0;
    GroupHom f_G;
    GroupHom f_H;
};

/// Throws ValidationError when k < 2 or a factor is not of order 2.
DihedralOracle dihedral_oracle(std::uint64_t k, const GroupPtr& G, const GroupPtr& H);

/// The image of G*H in a certificate's matrix group, as a Cayley table with
/// the two factor maps, when the closure has at most `cap` elements.
struct ImageQuotient {
    GroupPtr T;
    GroupHom f_G;
    GroupHom f_H;
};
std::optional<ImageQuotient> image_quotient(const SeparationCertificate& cert, std::size_t cap);

struct OracleCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct RefutationCertificate {
    CoproductCandidate candidate;
    ElemIndex g = 0;
    ElemIndex h = 0;
    std::uint64_t m = 0;  // order of ι_G(g)·ι_H(h) in F
    SeparationCertificate separation;
    std::vector<OracleCheck> oracle_checks;
};

struct RefuteOptions {
    bool dihedral = false;
    /// Cross-check by exhaustive enumeration when the quotient is this small.
    std::size_t enumeration_cap = 64;
};

/// The order obstruction: a finite quotient T of G*H in which gh has order
/// > m, so no f : F → T with f∘ι_G = f_G and f∘ι_H = f_H exists.
RefutationCertificate refute(const CoproductCandidate& candidate, ElemIndex g, ElemIndex h,
                             const RunConfig& config = {}, const RefuteOptions& options = {});

/// Candidate file: {"G": <group>, "H": <group>, "F": <group>,
/// "iota_G": {"<G label>": "<F label>", ...}, "iota_H": {...}}.
CoproductCandidate candidate_from_json(const Json& j);
Json candidate_to_json(const CoproductCandidate& c);
Json refutation_to_json(const RefutationCertificate& r);

/// Verifies the embedded separation and that m, g, h agree with the
/// candidate.
VerifyReport verify_refutation(const Json& j);

}  // namespace coprod
