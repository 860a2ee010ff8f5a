#ifndef DEDEKIND_VERIFY_HPP
#define DEDEKIND_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dedekind/dataset.hpp"
#include "dedekind/pipeline.hpp"

namespace dedekind {

/// A record whose from-scratch recomputation disagrees with what the
/// dataset stores.
struct RecomputeMismatch {
    std::uint32_t class_index = 0;
    TopRecord stored;
    TopRecord recomputed;
};

struct ResidueCheck {
    std::uint64_t modulus = 0;
    std::uint64_t expected = 0;
};

struct ResidueResult {
    std::uint64_t modulus = 0;
    std::uint64_t expected = 0;
    std::uint64_t actual = 0;
    bool pass = false;
};

struct CountSumResult {
    bool pass = false;
    BigInt actual;
    BigInt expected;
};

/// Aggregated result of one audit pass.
struct AuditReport {
    std::uint64_t checked_records = 0;
    std::vector<RecomputeMismatch> mismatches;
    std::vector<ResidueResult> residue_results;
    bool count_sum_pass = false;
    BigInt count_sum_actual;
    BigInt count_sum_expected;
    BigInt total;

    bool ok() const {
        if (!mismatches.empty() || !count_sum_pass) return false;
        for (const ResidueResult& r : residue_results) {
            if (!r.pass) return false;
        }
        return true;
    }
};

/// Recomputes one record from scratch through the pipeline and compares
/// both stored fields bit-exactly. Returns the mismatch, or nullopt on a
/// match. Full-dataset sweeps are practical for m <= 5.
std::optional<RecomputeMismatch> recompute_top(const Dataset& dataset,
                                               std::uint32_t class_index);

/// Sum of the per-record valid counts must equal D(m+1) from the built-in
/// reference table (m <= 6): the correct number of terms was added.
CountSumResult check_count_sum(const Dataset& dataset);

/// total mod modulus == expected.
bool check_residue(const BigInt& total, std::uint64_t modulus, std::uint64_t expected);

/// Overwrites one aligned page of a simulated transfer buffer with
/// seeded pseudorandom bytes, clipped to the buffer end; models a page of
/// per-bottom results that did not copy properly. Test harness only.
std::vector<std::byte> inject_page_corruption(std::span<const std::byte> buffer,
                                              std::size_t page_size,
                                              std::size_t page_index,
                                              std::uint64_t seed);

struct AuditOptions {
    /// Number of records to recompute, evenly spread over the dataset;
    /// nullopt recomputes all of them.
    std::optional<std::uint64_t> sample;
    std::vector<ResidueCheck> residues;
    unsigned workers = 0;
};

/// The layered check suite over one dataset: structural integrity scan,
/// count-sum identity, configured residue checks, and per-record
/// recomputation of the sample. Side-effect free.
AuditReport audit(const Dataset& dataset, const AuditOptions& options = {});

} // namespace dedekind

#endif // DEDEKIND_VERIFY_HPP
