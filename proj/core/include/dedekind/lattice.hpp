#ifndef DEDEKIND_LATTICE_HPP
#define DEDEKIND_LATTICE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dedekind/bigint.hpp"
#include "dedekind/mbf.hpp"

namespace dedekind {

/// All of D_m in ascending truth-word order, with reverse lookup.
/// Enumeration is capped at m = 6 (7828354 functions, one 64-bit word
/// each); D_7 is beyond desk scale.
class LatticeIndex {
public:
    static LatticeIndex build(BaseSize m);

    BaseSize base_size() const noexcept { return m_; }
    std::size_t size() const noexcept { return words_.size(); }
    std::span<const std::uint64_t> words() const noexcept { return words_; }
    std::uint64_t word_at(std::size_t i) const { return words_[i]; }
    Mbf mbf_at(std::size_t i) const {
        return Mbf::from_truth_unchecked(m_, words_[i]);
    }
    std::optional<std::size_t> index_of_word(std::uint64_t w) const;
    std::optional<std::size_t> index_of(const Mbf& f) const;

private:
    LatticeIndex(BaseSize m, std::vector<std::uint64_t> words)
        : m_(m), words_(std::move(words)) {}

    BaseSize m_;
    std::vector<std::uint64_t> words_;
};

/// Enumerates D_m, m <= 6.
LatticeIndex enumerate_mbfs(BaseSize m);

/// |[bot, alpha]|: the number of monotone functions below alpha.
///
/// Computed by splitting on the last variable: a function on m variables
/// is a pair (f0, f1) of functions on m-1 variables with f1 <= f0, so the
/// count below alpha = (a0, a1) is the sum over downsets chi0 <= a0 of the
/// count below meet(chi0, a1). Subproblems are memoized under their
/// canonical form; the memo is safe for concurrent use.
BigInt interval_size_down(const Mbf& alpha);

/// |[beta, top]| = |[bot, dual(beta)]|, via the dual to reuse one path.
BigInt interval_size_up(const Mbf& beta);

/// Number of ordered pairs (alpha, gamma) in D_m with alpha <= gamma,
/// which equals D(m+1). Exact double loop for m <= 5; for m = 6 the sum
/// of interval_size_down over D_6 is taken orbit by orbit.
BigInt count_leq_pairs(BaseSize m);

} // namespace dedekind

#endif // DEDEKIND_LATTICE_HPP
