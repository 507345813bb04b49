#pragma once

#include "coprod/arith/fp.hpp"
#include "coprod/arith/matrix.hpp"
#include "coprod/arith/poly.hpp"
#include "coprod/rep/representation.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace coprod {

using FpMatrix = Matrix<FpElem>;

/// Knobs shared by every pipeline entry point.
struct RunConfig {
    std::size_t verify_len = kDefaultVerifyLen;
    ConjugatorSpec conjugator{};
    /// Total number of conjugators tried, the first one included.
    std::size_t retry_limit = 5;
    std::size_t closure_cap = 10000;
    /// Seed of the retry sequence random:<seed>, random:<seed+1>, ...
    std::uint64_t seed = 1;
    /// build_quotient also separates (gh)^(m!) when m is at most this.
    std::uint64_t factorial_check_max_m = 5;
};

/// D and the per-target N polynomials for one representation.
struct SeparationData {
    std::shared_ptr<const FunctionFieldRep> rep;
    Poly D;
    std::vector<Poly> N;  // one per symbolic target
    std::vector<Rat> excluded;  // candidate points rejected by choose_specialization
};

/// ρ_s: every syllable image evaluated at t = s (indexed by element, identity
/// included), and D_s, the lcm of all entry denominators.
struct RationalSpecialization {
    Rat s;
    std::vector<RatMatrix> images_g;
    std::vector<RatMatrix> images_h;
    BigInt D_s;

    [[nodiscard]] const RatMatrix& image(Syllable x) const {
        return x.side == Side::G ? images_g.at(x.element) : images_h.at(x.element);
    }
    [[nodiscard]] RatMatrix apply(const Word& w) const;
};

/// One nonzero entry of ρ_s(w) − I; primes dividing its numerator are
/// excluded so the entry survives reduction.
struct Witness {
    std::size_t row = 0;
    std::size_t col = 0;
    Rat value;
};

/// ρ_{s,p}: syllable images over Z/p.
struct ModularSpecialization {
    std::uint64_t p = 0;
    std::vector<FpMatrix> images_g;
    std::vector<FpMatrix> images_h;
    std::vector<Witness> witnesses;  // one per target passed to choose_prime

    [[nodiscard]] const FpMatrix& image(Syllable x) const {
        return x.side == Side::G ? images_g.at(x.element) : images_h.at(x.element);
    }
    [[nodiscard]] FpMatrix apply(const Word& w) const;
};

/// Monic lcm of the denominators of every entry of every syllable image.
Poly compute_D(const FunctionFieldRep& rep);

/// Monic gcd of the numerators of the nonzero entries of image − I. Throws
/// ArithmeticError when image = I.
Poly compute_N(const FuncMatrix& image);
/// compute_N(ρ(w)); throws FaithfulnessError when ρ(w) = I and
/// ValidationError for the empty word.
Poly compute_N(const FunctionFieldRep& rep, const Word& w);

/// Evaluates every syllable image at t = s. Throws ArithmeticError at a pole.
RationalSpecialization specialize(const FunctionFieldRep& rep, const Rat& s);

/// Smallest s in 1, 2, 3, ... with D(s) ≠ 0, N(s) ≠ 0 for every recorded N,
/// and `accept` (when given) true. Rejected points are appended to
/// data.excluded.
RationalSpecialization choose_specialization(
    SeparationData& data, const std::function<bool(const RationalSpecialization&)>& accept = {});

/// Smallest prime not dividing D_s nor any witness numerator.
std::uint64_t smallest_admissible_prime(const BigInt& D_s, const std::vector<BigInt>& witness_numerators);

/// Picks the first nonzero entry of each ρ_s(target) − I as witness, then
/// the smallest admissible prime, and reduces the syllable images mod p.
/// Throws PipelineError if some target is I over Q.
ModularSpecialization choose_prime(const RationalSpecialization& spec, const std::vector<RatMatrix>& targets_at_s);

/// Breadth-first closure of a set of invertible matrices over Z/p.
struct ClosureResult {
    bool complete = false;
    std::size_t size = 0;  // exact when complete, otherwise the count reached at the cap
    std::vector<FpMatrix> elements;  // filled only when complete
};
ClosureResult matrix_group_closure(const std::vector<FpMatrix>& generators, std::size_t cap);

/// A conjugator the pipeline gave up on and why.
struct RejectedConjugator {
    std::string conjugator;
    std::string word;  // the word sent to I
    std::string reason;
};

/// One verified inequation ρ_{s,p}(w^k) ≠ I.
struct PowerCheck {
    std::uint64_t k = 0;
    bool nonidentity = false;
};

/// Everything needed to replay a separation using Z/p arithmetic only.
struct SeparationCertificate {
    enum class Kind { Separate, Quotient };
    Kind kind = Kind::Separate;
    GroupPtr G;
    GroupPtr H;
    Word word;  // the separated word (gh for a quotient)
    std::optional<ElemIndex> g;  // quotient only
    std::optional<ElemIndex> h;
    std::optional<std::uint64_t> m;
    std::string conjugator;
    std::uint64_t seed = 0;
    std::size_t verify_len = 0;
    std::vector<RejectedConjugator> rejected;
    Rat s;
    std::uint64_t p = 0;
    Poly D;
    BigInt D_s;
    std::vector<std::pair<std::uint64_t, Poly>> N;  // exponent k -> N of w^k
    std::vector<FpMatrix> images_g;
    std::vector<FpMatrix> images_h;
    std::optional<FpMatrix> target_image;  // ρ_{s,p}(word)
    std::vector<PowerCheck> checks;
    std::optional<PowerCheck> factorial_check;  // k = m!
    std::optional<std::size_t> closure_size;
};

/// Separates a nonempty reduced word from the identity in a finite quotient
/// of G*H. Throws ValidationError for the empty word and PipelineError when
/// every conjugator fails.
SeparationCertificate separate_word(const FreeProduct& fp, const Word& w, const RunConfig& config = {});

/// A single (s, p) separating (gh)^k for all 1 <= k <= m, so the image of
/// gh has order > m.
SeparationCertificate build_quotient(const FreeProduct& fp, ElemIndex g, ElemIndex h, std::uint64_t m,
                                     const RunConfig& config = {});

/// The rep that a certificate was produced with, rebuilt from its recorded
/// conjugator.
FunctionFieldRep rebuild_rep(const SeparationCertificate& cert);

}  // namespace coprod
