#ifndef DEDEKIND_EQUIV_HPP
#define DEDEKIND_EQUIV_HPP

#include <cstdint>
#include <vector>

#include "dedekind/mbf.hpp"

namespace dedekind {

/// One equivalence class of monotone functions under permutation of the
/// base set: its canonical representative, orbit size and position in the
/// deterministic class ordering.
struct ClassInfo {
    Mbf rep;
    std::uint32_t orbit_size = 0;
    std::uint32_t class_index = 0;
};

/// The minimum, over all m! base permutations, of the permuted images of
/// f, compared as truth-word integers. Idempotent and constant on orbits.
Mbf canonicalize(const Mbf& f);

/// Number of distinct images of f under all base permutations; divides m!.
std::uint32_t orbit_size(const Mbf& f);

/// The distinct permuted images of f, ascending by truth word.
std::vector<Mbf> distinct_equivalents(const Mbf& f);

/// One ClassInfo per equivalence class of D_m, ordered ascending by
/// representative truth word. m <= 6; enumerating the classes of D_7 is
/// beyond this build.
std::vector<ClassInfo> enumerate_classes(BaseSize m);

namespace detail {

/// Word-level canonical form for truth tables that fit 64 bits (m <= 6).
/// Hot path shared by class enumeration and the interval memo keys.
std::uint64_t canonical_word64(std::uint64_t truth, int m);

/// Appends the full m!-step image sweep of `truth` to `out` (duplicates
/// included; m! entries).
void permuted_images64(std::uint64_t truth, int m, std::vector<std::uint64_t>& out);

/// Distinct permuted images, sorted ascending.
std::vector<std::uint64_t> orbit_words64(std::uint64_t truth, int m);

} // namespace detail

} // namespace dedekind

#endif // DEDEKIND_EQUIV_HPP
