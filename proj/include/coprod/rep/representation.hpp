#pragma once

#include "coprod/arith/matrix.hpp"
#include "coprod/arith/rat.hpp"
#include "coprod/arith/ratfunc.hpp"
#include "coprod/errors.hpp"
#include "coprod/group/word.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace coprod {

using RatMatrix = Matrix<Rat>;
using FuncMatrix = Matrix<RatFunc>;

/// Left-regular representation: images[x] is the permutation matrix with a
/// 1 at (x·y, y) for every y.
struct RegularRep {
    std::size_t dim = 0;
    std::vector<RatMatrix> images;
};

RegularRep build_regular_rep(const FiniteGroup& G);

/// The faithful representation of G×H on Q[G]⊕Q[H]: imageG[g] = λ_G(g) ⊕ I,
/// imageH[h] = I ⊕ λ_H(h), n = |G| + |H|.
struct ProductRep {
    std::size_t dim = 0;
    std::vector<RatMatrix> imageG;
    std::vector<RatMatrix> imageH;
};

/// Throws ValidationError when either factor is trivial.
ProductRep build_product_rep(const FiniteGroup& G, const FiniteGroup& H);

/// Which C(t) conjugates the H-block. `all-ones` is C = I + t·E with E the
/// all-ones matrix; `random:<seed>` is C = I + t·R with R an integer matrix
/// drawn from mt19937_64(seed), entries in {-1, 0, 1}.
struct ConjugatorSpec {
    enum class Kind { AllOnes, Random };
    Kind kind = Kind::AllOnes;
    std::uint64_t seed = 0;

    /// Parses "all-ones" or "random:<seed>". Throws ValidationError.
    static ConjugatorSpec parse(const std::string& text);
    static ConjugatorSpec random(std::uint64_t seed) { return {Kind::Random, seed}; }
    [[nodiscard]] std::string str() const;
    /// C(t) as an n×n matrix over Q(t).
    [[nodiscard]] FuncMatrix matrix(std::size_t n) const;

    friend bool operator==(const ConjugatorSpec&, const ConjugatorSpec&) = default;
};

/// Raised when a nonempty reduced word maps to the identity matrix. Carries
/// the offending word so the caller can report it and retry with another
/// conjugator.
class FaithfulnessError : public PipelineError {
public:
    FaithfulnessError(const std::string& what, Word word, ConjugatorSpec spec)
        : PipelineError(what), word_(std::move(word)), spec_(spec) {}
    [[nodiscard]] const Word& word() const { return word_; }
    [[nodiscard]] const ConjugatorSpec& conjugator() const { return spec_; }

private:
    Word word_;
    ConjugatorSpec spec_;
};

inline constexpr std::size_t kDefaultVerifyLen = 6;

/// ρ : G*H → GL_n(Q(t)). G-syllables act by the constant first-factor
/// block, H-syllables by the second-factor block conjugated by C(t). All
/// syllable images are computed once at construction.
class FunctionFieldRep {
public:
    [[nodiscard]] const FreeProduct& free_product() const { return fp_; }
    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] const ConjugatorSpec& conjugator_spec() const { return spec_; }
    [[nodiscard]] const FuncMatrix& conjugator() const { return conjugator_; }
    [[nodiscard]] std::size_t verified_length() const { return verified_length_; }

    [[nodiscard]] const FuncMatrix& image(Syllable s) const {
        return s.side == Side::G ? images_g_.at(s.element) : images_h_.at(s.element);
    }
    [[nodiscard]] const std::vector<FuncMatrix>& images_g() const { return images_g_; }
    [[nodiscard]] const std::vector<FuncMatrix>& images_h() const { return images_h_; }
    /// Every non-identity syllable, G side first, in element order.
    [[nodiscard]] std::vector<Syllable> syllables() const;

    /// ρ(w) as the ordered product of syllable images; ρ(ε) = I.
    [[nodiscard]] FuncMatrix apply(const Word& w) const;

private:
    friend FunctionFieldRep build_function_field_rep(const FreeProduct&, const ConjugatorSpec&, std::size_t);
    FunctionFieldRep(FreeProduct fp, ConjugatorSpec spec, FuncMatrix conj, std::vector<FuncMatrix> g,
                     std::vector<FuncMatrix> h)
        : fp_(std::move(fp)), dim_(conj.rows()), spec_(spec), conjugator_(std::move(conj)),
          images_g_(std::move(g)), images_h_(std::move(h)) {}

    FreeProduct fp_;
    std::size_t dim_;
    ConjugatorSpec spec_;
    FuncMatrix conjugator_;
    std::vector<FuncMatrix> images_g_;
    std::vector<FuncMatrix> images_h_;
    std::size_t verified_length_ = 0;
};

/// Builds ρ and verifies ρ(w) ≠ I for every nonempty reduced word of length
/// <= verify_len (verify_len >= 2). Throws FaithfulnessError carrying the
/// first colliding word, ValidationError for trivial factors or
/// verify_len < 2.
FunctionFieldRep build_function_field_rep(const FreeProduct& fp, const ConjugatorSpec& spec,
                                          std::size_t verify_len = kDefaultVerifyLen);

/// Shorthand for rep.apply(w).
inline FuncMatrix rep_apply(const FunctionFieldRep& rep, const Word& w) { return rep.apply(w); }

}  // namespace coprod
