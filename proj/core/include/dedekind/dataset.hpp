#ifndef DEDEKIND_DATASET_HPP
#define DEDEKIND_DATASET_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dedekind/bigint.hpp"
#include "dedekind/mbf.hpp"

namespace dedekind {

/// Per-top intermediary result: the full class-formula summand for one
/// alpha class and the orbit-weighted count of valid permuted bottoms.
/// Each record is recomputable in isolation.
struct TopRecord {
    std::uint32_t class_index = 0;
    std::string rep;
    BigInt term_value;
    BigInt valid_count;

    friend bool operator==(const TopRecord&, const TopRecord&) = default;
};

/// One shard of a run: the half-open range of top class indices it owns
/// plus the run mode flags.
struct JobManifest {
    enum class Mode { Class, Direct };

    BaseSize m;
    std::uint32_t job_id = 0;
    std::uint32_t lo = 0;
    std::uint32_t hi = 0;
    Mode mode = Mode::Class;
    bool dedup = false;
};

/// A complete or partial per-top result set.
struct Dataset {
    BaseSize m;
    std::uint32_t class_count = 0;
    std::vector<TopRecord> records;
    /// Present when the file carried a TOTAL trailer (merged datasets).
    std::optional<BigInt> stored_total;
};

/// Line format: "JOB <id> RANGE <lo> <hi> MODE <class|direct> DEDUP <0|1>".
std::string manifest_line(const JobManifest& manifest);
JobManifest parse_manifest_line(std::string_view line, BaseSize m,
                                std::size_t line_number = 0);
void write_manifests(std::ostream& out, std::span<const JobManifest> manifests);
std::vector<JobManifest> read_manifests(std::istream& in, BaseSize m);

/// Splits [0, class_count) into `jobs` contiguous ranges of near-equal size.
std::vector<JobManifest> make_manifests(BaseSize m, std::uint32_t class_count,
                                        std::uint32_t jobs);

/// Record line: "<class_index>\t<rep>\t<term_value>\t<valid_count>".
std::string record_line(const TopRecord& record);
TopRecord parse_record_line(std::string_view line, std::size_t line_number);

/// Dataset file: header "DEDEKIND-DATASET v1 m=<m> classes=<R>", one record
/// line per top in class_index order, and (merged files only) a trailer
/// "TOTAL\t<decimal>".
void write_dataset(std::ostream& out, const Dataset& dataset, bool with_total);
Dataset read_dataset(std::istream& in);

/// Throws integrity_error naming the class index unless every index in
/// [0, class_count) appears exactly once, in order.
void validate_complete(const Dataset& dataset);

} // namespace dedekind

#endif // DEDEKIND_DATASET_HPP
