// Acceptance suite: every gate this artifact must clear, one line each.
// Exit code is the number of failed criteria.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dedekind/equiv.hpp"
#include "dedekind/lattice.hpp"
#include "dedekind/pcoeff.hpp"
#include "dedekind/pipeline.hpp"
#include "dedekind/tables.hpp"
#include "dedekind/verify.hpp"

using namespace dedekind;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
    std::string name;
    std::function<std::optional<std::string>()> check;  // nullopt = pass
    double budget_seconds = 0;                          // 0 = untimed
};

std::string dataset_bytes(const Dataset& dataset) {
    std::stringstream stream;
    write_dataset(stream, dataset, /*with_total=*/true);
    return stream.str();
}

Dataset run_level(int m, std::uint32_t jobs, unsigned workers,
                  RunStats* stats = nullptr) {
    MemorySink sink;
    PipelineOptions options;
    options.workers = workers;
    return run_sharded(BaseSize(m), jobs, sink, options, stats);
}

std::optional<std::string> expect_equal(const BigInt& actual, const BigInt& expected,
                                        const std::string& label) {
    if (actual == expected) return std::nullopt;
    return label + ": got " + actual.str() + ", expected " + expected.str();
}

} // namespace

int main() {
    std::vector<Criterion> criteria;

    criteria.push_back({"direct-mode D(3)=20 and D(4)=168", [] {
        if (auto e = expect_equal(compute_direct(BaseSize(1)), 20, "D(3)")) return e;
        if (auto e = expect_equal(compute_direct(BaseSize(2)), 168, "D(4)")) return e;
        return std::optional<std::string>{};
    }, 1.0});

    criteria.push_back({"class and dedup modes agree on D(5)=7581", [] {
        const BigInt via_class = compute_class_total(BaseSize(3));
        const BigInt via_dedup = compute_dedup(BaseSize(3));
        if (auto e = expect_equal(via_class, 7581, "class mode D(5)")) return e;
        if (via_class != via_dedup) {
            return std::optional<std::string>("modes disagree: class " +
                                              via_class.str() + " vs dedup " +
                                              via_dedup.str());
        }
        return std::optional<std::string>{};
    }, 1.0});

    criteria.push_back({"class mode D(6)=7828354", [] {
        return expect_equal(compute_class_total(BaseSize(4)), 7828354, "D(6)");
    }, 60.0});

    criteria.push_back({"sharded D(7)=2414682040998 (7 jobs, 2 workers)", [] {
        RunStats stats;
        const Dataset dataset = run_level(5, 7, 2, &stats);
        if (stats.jobs_run != 7) {
            return std::optional<std::string>("expected 7 jobs, ran " +
                                              std::to_string(stats.jobs_run));
        }
        return expect_equal(total(dataset), tables::dedekind_number(7), "D(7)");
    }, 1800.0});

    criteria.push_back({"R(m) matches the table for m=0..6", [] {
        const std::size_t expected[] = {2, 3, 5, 10, 30, 210, 16353};
        for (int m = 0; m <= 6; ++m) {
            const std::size_t count = enumerate_classes(BaseSize(m)).size();
            if (count != expected[m]) {
                return std::optional<std::string>(
                    "R(" + std::to_string(m) + ") = " + std::to_string(count) +
                    ", expected " + std::to_string(expected[m]));
            }
        }
        return std::optional<std::string>{};
    }, 60.0});

    criteria.push_back({"pcoeff equals the solution-count oracle", [] {
        const LatticeIndex d3 = enumerate_mbfs(BaseSize(3));
        int checked = 0;
        for (std::size_t a = 0; a < d3.size(); ++a) {
            for (std::size_t b = 0; b < d3.size(); ++b) {
                const Mbf alpha = d3.mbf_at(a);
                const Mbf beta = d3.mbf_at(b);
                if (!leq(alpha, beta)) continue;
                if (pcoeff_value(alpha, beta) != solution_count_oracle(alpha, beta)) {
                    return std::optional<std::string>("mismatch in D_3 at pair (" +
                                                      to_string(alpha) + ", " +
                                                      to_string(beta) + ")");
                }
                ++checked;
            }
        }
        if (checked != 168) {
            return std::optional<std::string>("expected 168 D_3 pairs, saw " +
                                              std::to_string(checked));
        }
        const LatticeIndex d4 = enumerate_mbfs(BaseSize(4));
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t a = 0; a < d4.size(); ++a) {
            for (std::size_t b = 0; b < d4.size(); ++b) {
                if ((d4.word_at(a) & ~d4.word_at(b)) == 0) pairs.emplace_back(a, b);
            }
        }
        std::mt19937_64 rng(0x5eed0104);
        std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
        for (int i = 0; i < 10000; ++i) {
            const auto [a, b] = pairs[pick(rng)];
            const Mbf alpha = d4.mbf_at(a);
            const Mbf beta = d4.mbf_at(b);
            if (pcoeff_value(alpha, beta) != solution_count_oracle(alpha, beta)) {
                return std::optional<std::string>("mismatch in D_4 at pair (" +
                                                  to_string(alpha) + ", " +
                                                  to_string(beta) + ")");
            }
        }
        return std::optional<std::string>{};
    }});

    criteria.push_back({"valid counts sum to D(m+1) for m=3,4,5", [] {
        const std::uint64_t expected[] = {168, 7581, 7828354};
        for (int m = 3; m <= 5; ++m) {
            const Dataset dataset = run_level(m, 1, 2);
            BigInt valid_sum = 0;
            for (const TopRecord& record : dataset.records) {
                valid_sum += record.valid_count;
            }
            if (valid_sum != expected[m - 3]) {
                return std::optional<std::string>(
                    "m=" + std::to_string(m) + ": valid sum " + valid_sum.str() +
                    ", expected " + std::to_string(expected[m - 3]));
            }
        }
        return std::optional<std::string>{};
    }});

    criteria.push_back({"residues: claimed D(9) = 6 mod 210, pinned D(5..7)", [] {
        if (!check_residue(tables::dedekind_number(9), 210, 6)) {
            return std::optional<std::string>("claimed D(9) is not 6 mod 210");
        }
        const std::uint64_t pinned[] = {21, 184, 108};
        for (int m = 3; m <= 5; ++m) {
            const BigInt computed = compute_class_total(BaseSize(m));
            if (!check_residue(computed, 210, pinned[m - 3])) {
                return std::optional<std::string>(
                    "computed D(" + std::to_string(m + 2) + ") is not " +
                    std::to_string(pinned[m - 3]) + " mod 210");
            }
        }
        return std::optional<std::string>{};
    }});

    criteria.push_back({"datasets are byte-identical across shardings", [] {
        for (int m = 3; m <= 5; ++m) {
            const std::string reference = dataset_bytes(run_level(m, 1, 1));
            const std::string sharded = dataset_bytes(run_level(m, 4, 2));
            if (reference != sharded) {
                return std::optional<std::string>(
                    "m=" + std::to_string(m) + ": bytes differ between shardings");
            }
        }
        return std::optional<std::string>{};
    }});

    criteria.push_back({"fault injection is detected", [] {
        const std::vector<ClassInfo> classes = enumerate_classes(BaseSize(3));
        const Dataset clean = run_level(3, 1, 1);

        // Any single tampered record field trips the audit. The trailer is
        // kept consistent so the per-record layers must do the catching.
        for (std::size_t i = 0; i < clean.records.size(); ++i) {
            Dataset term_tamper = clean;
            term_tamper.records[i].term_value += 1;
            term_tamper.stored_total = *term_tamper.stored_total + 1;
            if (audit(term_tamper).ok()) {
                return std::optional<std::string>("term tamper at record " +
                                                  std::to_string(i) + " not caught");
            }
            Dataset count_tamper = clean;
            count_tamper.records[i].valid_count += 1;
            if (audit(count_tamper).ok()) {
                return std::optional<std::string>("count tamper at record " +
                                                  std::to_string(i) + " not caught");
            }
        }

        // A full 4096-byte page of corrupted per-bottom results shows up as
        // a valid-count mismatch.
        const std::vector<BottomSample> buffer =
            compute_bottom_buffer(classes[0], classes);
        std::vector<std::byte> bytes(buffer.size() * sizeof(BottomSample));
        std::memcpy(bytes.data(), buffer.data(), bytes.size());
        const std::vector<std::byte> corrupted_bytes =
            inject_page_corruption(bytes, 4096, 0, 0xFEED);
        std::vector<BottomSample> corrupted(buffer.size());
        std::memcpy(corrupted.data(), corrupted_bytes.data(), corrupted_bytes.size());
        Dataset page_tamper = clean;
        page_tamper.records[0] = aggregate_bottom_buffer(classes[0], classes, corrupted);
        if (check_count_sum(page_tamper).pass) {
            return std::optional<std::string>(
                "page corruption left the valid-count sum intact");
        }
        return std::optional<std::string>{};
    }});

    criteria.push_back({"undersized accumulator aborts on overflow", [] {
        PipelineOptions narrow;
        narrow.accumulator_bits = 8;
        MemorySink sink;
        try {
            run_sharded(BaseSize(3), 1, sink, narrow);
        } catch (const accumulator_overflow_error&) {
            return std::optional<std::string>{};
        }
        return std::optional<std::string>("narrow run completed without aborting");
    }});

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        const auto start = Clock::now();
        std::optional<std::string> failure;
        try {
            failure = criterion.check();
        } catch (const std::exception& e) {
            failure = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(Clock::now() - start).count();
        if (!failure && criterion.budget_seconds > 0 &&
            seconds > criterion.budget_seconds) {
            failure = "took " + std::to_string(seconds) + "s, budget " +
                      std::to_string(criterion.budget_seconds) + "s";
        }
        if (failure) {
            ++failures;
            std::cout << "FAIL " << criterion.name << ": " << *failure << '\n';
        } else {
            std::ostringstream time_note;
            time_note.precision(2);
            time_note << std::fixed << seconds;
            std::cout << "PASS " << criterion.name << " (" << time_note.str()
                      << "s)\n";
        }
    }
    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << '\n';
    return failures;
}
