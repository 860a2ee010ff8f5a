#ifndef DEDEKIND_TESTS_SUPPORT_HPP
#define DEDEKIND_TESTS_SUPPORT_HPP

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "dedekind/bigint.hpp"
#include "dedekind/lattice.hpp"
#include "dedekind/mbf.hpp"

namespace dedekind::testing {

/// Monotone function from its antichain masks.
inline Mbf mbf_from_masks(int m, std::initializer_list<std::uint32_t> masks) {
    std::vector<PointMask> elems;
    for (std::uint32_t mask : masks) elems.push_back(PointMask{mask});
    return from_antichain(AntiChain::from_elements(BaseSize(m), std::move(elems)));
}

/// Independent oracle for |[bot, alpha]|: a direct scan of the enumerated
/// lattice. Kept apart from the recursive implementation it checks.
inline BigInt brute_force_interval_down(const Mbf& alpha) {
    const LatticeIndex index = enumerate_mbfs(alpha.base_size());
    const std::uint64_t a = static_cast<std::uint64_t>(alpha.truth());
    std::uint64_t count = 0;
    for (std::uint64_t w : index.words()) {
        if ((w & ~a) == 0) ++count;
    }
    return BigInt(count);
}

} // namespace dedekind::testing

#endif // DEDEKIND_TESTS_SUPPORT_HPP
