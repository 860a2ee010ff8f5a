#ifndef DEDEKIND_WIDE_ACCUMULATOR_HPP
#define DEDEKIND_WIDE_ACCUMULATOR_HPP

#include <array>
#include <cstdint>

#include "dedekind/bigint.hpp"

namespace dedekind {

/// Nonnegative integer accumulator with a declared capacity of at most
/// 192 bits. Every add and multiply is checked against the capacity and
/// throws accumulator_overflow_error on excess; wraparound is structurally
/// impossible. Per-top accumulation runs through this type; grand totals
/// are re-accumulated in arbitrary precision.
class WideAccumulator {
public:
    static constexpr unsigned kMaxBits = 192;

    explicit WideAccumulator(unsigned capacity_bits = kMaxBits);

    unsigned capacity_bits() const noexcept { return bits_; }
    bool is_zero() const noexcept {
        return limbs_[0] == 0 && limbs_[1] == 0 && limbs_[2] == 0;
    }

    void add(unsigned __int128 v);
    void add(const WideAccumulator& other);
    void multiply(std::uint64_t v);

    BigInt value() const;

private:
    void check_capacity() const;

    std::array<std::uint64_t, 3> limbs_{};
    unsigned bits_;
};

} // namespace dedekind

#endif // DEDEKIND_WIDE_ACCUMULATOR_HPP
