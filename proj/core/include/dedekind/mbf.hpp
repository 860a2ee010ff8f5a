#ifndef DEDEKIND_MBF_HPP
#define DEDEKIND_MBF_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dedekind/errors.hpp"

namespace dedekind {

/// One truth table as a flat bit word. Index S (a subset of the base set
/// encoded as a binary integer, bit i = element i) holds f(S). At most
/// 2^7 = 128 entries, so one 128-bit word always suffices.
using TruthWord = unsigned __int128;

/// Size of the base set, 0..7.
class BaseSize {
public:
    explicit BaseSize(int m) : m_(m) {
        if (m < 0 || m > 7) {
            throw input_shape_error("base size must be in [0, 7], got " +
                                    std::to_string(m));
        }
    }

    int value() const noexcept { return m_; }
    /// Number of truth table entries, 2^m.
    unsigned point_count() const noexcept { return 1u << m_; }

    friend bool operator==(BaseSize a, BaseSize b) noexcept { return a.m_ == b.m_; }
    friend bool operator!=(BaseSize a, BaseSize b) noexcept { return a.m_ != b.m_; }

private:
    int m_;
};

/// A subset of the base set as a bit mask (bit i set means element i is in).
struct PointMask {
    std::uint32_t bits = 0;

    friend auto operator<=>(PointMask, PointMask) = default;
};

namespace detail {

/// All-ones truth word over the 2^m valid indices.
inline TruthWord full_truth(int m) {
    const unsigned n = 1u << m;
    if (n >= 128) return ~TruthWord{0};
    return (TruthWord{1} << n) - 1;
}

inline bool truth_bit(TruthWord w, std::uint32_t index) {
    return ((w >> index) & 1) != 0;
}

} // namespace detail

/// A monotone Boolean function: the set of subsets where it is true is
/// downward closed, so the maximal true sets form an antichain. Immutable;
/// every operation returns a new value, which makes instances safe to
/// share between threads.
class Mbf {
public:
    /// The everywhere-false function, the lattice minimum.
    static Mbf bottom(BaseSize m) { return Mbf(m, 0); }
    /// The everywhere-true function, the lattice maximum.
    static Mbf top(BaseSize m) { return Mbf(m, detail::full_truth(m.value())); }

    /// Builds from an untrusted truth word; validates downward closure.
    static Mbf from_truth(BaseSize m, TruthWord truth);

    /// Builds from a truth word already known to be monotone (enumeration
    /// and kernel internals). Checked in debug builds only.
    static Mbf from_truth_unchecked(BaseSize m, TruthWord truth) {
        return Mbf(m, truth);
    }

    BaseSize base_size() const noexcept { return m_; }
    TruthWord truth() const noexcept { return truth_; }

    /// f(S) for one subset.
    bool operator()(PointMask s) const { return detail::truth_bit(truth_, s.bits); }

    friend bool operator==(const Mbf& a, const Mbf& b) noexcept {
        return a.m_ == b.m_ && a.truth_ == b.truth_;
    }
    friend bool operator!=(const Mbf& a, const Mbf& b) noexcept { return !(a == b); }
    /// Order by truth word as an integer; the canonical tie-break everywhere.
    friend bool operator<(const Mbf& a, const Mbf& b) noexcept {
        return a.truth_ < b.truth_;
    }

private:
    Mbf(BaseSize m, TruthWord truth) : m_(m), truth_(truth) {}

    BaseSize m_;
    TruthWord truth_;
};

/// The maximal true sets of a monotone function: pairwise incomparable
/// subsets, stored ascending by mask value.
class AntiChain {
public:
    /// Validates pairwise incomparability and mask range; sorts ascending.
    static AntiChain from_elements(BaseSize m, std::vector<PointMask> elems);

    BaseSize base_size() const noexcept { return m_; }
    std::span<const PointMask> elements() const noexcept { return elems_; }
    bool empty() const noexcept { return elems_.empty(); }
    std::size_t size() const noexcept { return elems_.size(); }

    friend bool operator==(const AntiChain& a, const AntiChain& b) noexcept {
        return a.m_ == b.m_ && a.elems_ == b.elems_;
    }

private:
    AntiChain(BaseSize m, std::vector<PointMask> elems)
        : m_(m), elems_(std::move(elems)) {}

    BaseSize m_;
    std::vector<PointMask> elems_;
};

/// A relabeling of the base elements.
class Permutation {
public:
    static Permutation identity(BaseSize m);
    /// Validates that `mapping` (images of 0..m-1) is a bijection.
    static Permutation from_mapping(BaseSize m, std::span<const int> mapping);

    BaseSize base_size() const noexcept { return m_; }
    int image(int i) const { return map_[static_cast<std::size_t>(i)]; }

    Permutation inverse() const;
    /// Relabels the elements of a subset.
    PointMask apply(PointMask s) const;

    friend bool operator==(const Permutation& a, const Permutation& b) noexcept {
        return a.m_ == b.m_ && a.map_ == b.map_;
    }

private:
    Permutation(BaseSize m, std::array<std::uint8_t, 7> map) : m_(m), map_(map) {}

    BaseSize m_;
    std::array<std::uint8_t, 7> map_{};
};

/// (a . b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);

/// All m! permutations in lexicographic order of their mapping.
std::vector<Permutation> all_permutations(BaseSize m);

/// True iff `truth` is downward closed over the 2^m valid indices.
/// Bits at or above index 2^m must be zero (input-shape error otherwise).
bool is_monotone(TruthWord truth, BaseSize m);

/// f <= g in the lattice order: f(X) implies g(X) for every X.
bool leq(const Mbf& f, const Mbf& g);

/// Pointwise OR / AND of the truth tables.
Mbf join(const Mbf& f, const Mbf& g);
Mbf meet(const Mbf& f, const Mbf& g);

/// The order-reversing involution f*(S) = NOT f(A \ S).
Mbf dual(const Mbf& f);

/// The maximal true sets of f.
AntiChain to_antichain(const Mbf& f);
/// The downset closure of an antichain; inverse of to_antichain.
Mbf from_antichain(const AntiChain& ac);

/// Group action: result(S) = f(p^-1(S)).
Mbf apply_permutation(const Mbf& f, const Permutation& p);

/// Textual form "m=<m>:<hex>", lowercase hex of the truth word with the
/// most significant index first, fixed width of max(1, 2^m / 4) digits.
std::string to_string(const Mbf& f);
Mbf parse_mbf(std::string_view text);

/// Textual form "{m1,m2,...}", masks in decimal, ascending.
std::string to_string(const AntiChain& ac);

} // namespace dedekind

#endif // DEDEKIND_MBF_HPP
