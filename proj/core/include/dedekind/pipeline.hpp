#ifndef DEDEKIND_PIPELINE_HPP
#define DEDEKIND_PIPELINE_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "dedekind/dataset.hpp"
#include "dedekind/equiv.hpp"
#include "dedekind/wide_accumulator.hpp"

namespace dedekind {

struct PipelineOptions {
    /// Capacity of the per-top checked accumulators. The default covers
    /// every desk-scale level with wide margin; tests shrink it to prove
    /// the overflow path aborts instead of wrapping.
    unsigned accumulator_bits = WideAccumulator::kMaxBits;
    /// Worker threads; 0 resolves to the DEDEKIND_WORKERS environment
    /// variable, then to the hardware concurrency.
    unsigned workers = 0;
    /// Skip bottom classes whose per-cardinality true-set profile rules
    /// out any equivalent above the top. Purely an optimization: filtered
    /// terms are zero either way.
    bool use_prescreen = true;
};

/// Workload counters for one run.
struct RunStats {
    /// (top class, bottom class) pairs the permutation kernel ran on.
    std::uint64_t pairs_evaluated = 0;
    std::uint32_t jobs_run = 0;
    std::uint32_t jobs_skipped = 0;
};

/// D(m+2) by the direct double loop over alpha <= beta pairs of D_m,
/// summing |[bot,alpha]| * 2^C * |[beta,top]|. m <= 3.
BigInt compute_direct(BaseSize m, RunStats* stats = nullptr);

/// The full class-formula summand for one top class:
///   term_value  = |[bot,alpha]| * D_alpha * sum_B |[B,top]| * pcoeff_sum(alpha, B)
///   valid_count = D_alpha * sum_B valid(alpha, B)
/// The orbit factor D_alpha makes per-record valid counts add up to
/// D(m+1) over a complete dataset.
TopRecord compute_top_term(const ClassInfo& alpha_class,
                           std::span<const ClassInfo> classes,
                           const PipelineOptions& options = {});

/// Per-bottom intermediate results for one top, in class order. This is
/// the boundary the transfer-corruption checks exercise: a top record is
/// a pure aggregation of this buffer.
struct BottomSample {
    std::uint64_t pcoeff_sum = 0;
    std::uint64_t valid_count = 0;
};
std::vector<BottomSample> compute_bottom_buffer(const ClassInfo& alpha_class,
                                                std::span<const ClassInfo> classes,
                                                const PipelineOptions& options = {});
TopRecord aggregate_bottom_buffer(const ClassInfo& alpha_class,
                                  std::span<const ClassInfo> classes,
                                  std::span<const BottomSample> buffer,
                                  const PipelineOptions& options = {});

/// D(m+2) evaluating one pair per dual-mirror orbit: pair (A, B) mirrors
/// to (dual(B), dual(A)), which contributes the same term, so the smaller
/// pair key is evaluated with weight 2 (weight 1 when the pair is its own
/// mirror). Must reproduce the class-mode total exactly. m <= 5.
BigInt compute_dedup(BaseSize m, const PipelineOptions& options = {},
                     RunStats* stats = nullptr);

/// Where job results go. Parts persist per job so crashed runs resume by
/// skipping jobs whose completion marker is present.
class DatasetSink {
public:
    virtual ~DatasetSink() = default;
    /// Records of a previously completed run of this job, if any.
    virtual std::optional<std::vector<TopRecord>> load_complete_part(
        const JobManifest& manifest, std::uint32_t class_count) = 0;
    virtual void store_part(const JobManifest& manifest, std::uint32_t class_count,
                            std::span<const TopRecord> records) = 0;
    virtual void store_merged(const Dataset& dataset) = 0;
};

/// Keeps parts in memory; for tests and total-only runs.
class MemorySink final : public DatasetSink {
public:
    std::optional<std::vector<TopRecord>> load_complete_part(
        const JobManifest& manifest, std::uint32_t class_count) override;
    void store_part(const JobManifest& manifest, std::uint32_t class_count,
                    std::span<const TopRecord> records) override;
    void store_merged(const Dataset& dataset) override;

    const std::map<std::uint32_t, std::vector<TopRecord>>& parts() const {
        return parts_;
    }
    const std::optional<Dataset>& merged() const { return merged_; }

private:
    std::map<std::uint32_t, std::vector<TopRecord>> parts_;
    std::optional<Dataset> merged_;
};

/// Parts live as "part-<id>.txt" files under a directory; the merged
/// dataset is written to its own path. Part files end with an "END <n>"
/// marker; a file without it is a crash leftover and is recomputed.
class FileSink final : public DatasetSink {
public:
    FileSink(std::filesystem::path parts_dir, std::filesystem::path merged_path);

    std::optional<std::vector<TopRecord>> load_complete_part(
        const JobManifest& manifest, std::uint32_t class_count) override;
    void store_part(const JobManifest& manifest, std::uint32_t class_count,
                    std::span<const TopRecord> records) override;
    void store_merged(const Dataset& dataset) override;

    std::filesystem::path part_path(std::uint32_t job_id) const;

private:
    std::filesystem::path parts_dir_;
    std::filesystem::path merged_path_;
};

/// Runs every job not already complete in the sink, merges all parts in
/// class order and stores the merged dataset. Output is identical for any
/// job split and worker count. Manifests must be class mode, non-dedup,
/// and partition [0, R(m)).
Dataset run_jobs(BaseSize m, std::span<const JobManifest> manifests,
                 DatasetSink& sink, const PipelineOptions& options = {},
                 RunStats* stats = nullptr);

/// run_jobs with the manifests generated internally: the class range is
/// split into `jobs` contiguous shards.
Dataset run_sharded(BaseSize m, std::uint32_t jobs, DatasetSink& sink,
                    const PipelineOptions& options = {}, RunStats* stats = nullptr);

/// Class-mode total without a persistent dataset: one job into a memory
/// sink.
BigInt compute_class_total(BaseSize m, const PipelineOptions& options = {},
                           RunStats* stats = nullptr);

/// Sum of term values over a complete dataset; cross-checks the stored
/// trailer when present.
BigInt total(const Dataset& dataset);

/// Reads a part file (header, records, END marker). Returns the manifest
/// reconstructed from the header. Used by run_jobs resume and merge.
struct PartFile {
    JobManifest manifest;
    std::uint32_t class_count = 0;
    std::vector<TopRecord> records;
};
void write_part_file(std::ostream& out, const JobManifest& manifest,
                     std::uint32_t class_count, std::span<const TopRecord> records);
PartFile read_part_file(std::istream& in);

/// Merges part records into a complete dataset, validating that the parts
/// cover [0, class_count) exactly once.
Dataset merge_parts(BaseSize m, std::uint32_t class_count,
                    std::span<const PartFile> parts);

} // namespace dedekind

#endif // DEDEKIND_PIPELINE_HPP
