#include "dedekind/wide_accumulator.hpp"

#include "dedekind/errors.hpp"

namespace dedekind {

namespace {

constexpr std::uint64_t low64(unsigned __int128 v) {
    return static_cast<std::uint64_t>(v);
}
constexpr std::uint64_t high64(unsigned __int128 v) {
    return static_cast<std::uint64_t>(v >> 64);
}

[[noreturn]] void overflow(const char* op) {
    throw accumulator_overflow_error(
        std::string("wide accumulator overflow in ") + op);
}

} // namespace

WideAccumulator::WideAccumulator(unsigned capacity_bits) : bits_(capacity_bits) {
    if (capacity_bits == 0 || capacity_bits > kMaxBits) {
        throw config_error("accumulator capacity must be in [1, 192] bits");
    }
}

void WideAccumulator::check_capacity() const {
    // Any bit at position >= bits_ means the declared width was exceeded.
    for (unsigned limb = 0; limb < 3; ++limb) {
        const unsigned base = 64 * limb;
        if (bits_ >= base + 64) continue;
        const std::uint64_t allowed =
            (bits_ <= base) ? 0 : ((std::uint64_t{1} << (bits_ - base)) - 1);
        if ((limbs_[limb] & ~allowed) != 0) overflow("capacity check");
    }
}

void WideAccumulator::add(unsigned __int128 v) {
    unsigned __int128 sum = static_cast<unsigned __int128>(limbs_[0]) + low64(v);
    limbs_[0] = low64(sum);
    sum = static_cast<unsigned __int128>(limbs_[1]) + high64(v) + high64(sum);
    limbs_[1] = low64(sum);
    sum = static_cast<unsigned __int128>(limbs_[2]) + high64(sum);
    limbs_[2] = low64(sum);
    if (high64(sum) != 0) overflow("add");
    check_capacity();
}

void WideAccumulator::add(const WideAccumulator& other) {
    unsigned __int128 carry = 0;
    for (unsigned i = 0; i < 3; ++i) {
        const unsigned __int128 sum =
            static_cast<unsigned __int128>(limbs_[i]) + other.limbs_[i] + carry;
        limbs_[i] = low64(sum);
        carry = high64(sum);
    }
    if (carry != 0) overflow("add");
    check_capacity();
}

void WideAccumulator::multiply(std::uint64_t v) {
    unsigned __int128 carry = 0;
    for (unsigned i = 0; i < 3; ++i) {
        const unsigned __int128 product =
            static_cast<unsigned __int128>(limbs_[i]) * v + carry;
        limbs_[i] = low64(product);
        carry = high64(product);
    }
    if (carry != 0) overflow("multiply");
    check_capacity();
}

BigInt WideAccumulator::value() const {
    BigInt out = limbs_[2];
    out <<= 64;
    out += limbs_[1];
    out <<= 64;
    out += limbs_[0];
    return out;
}

} // namespace dedekind
