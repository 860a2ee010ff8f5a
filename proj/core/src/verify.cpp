#include "dedekind/verify.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "dedekind/equiv.hpp"
#include "dedekind/tables.hpp"

namespace dedekind {

namespace {

std::optional<RecomputeMismatch> recompute_with_classes(
    const Dataset& dataset, std::span<const ClassInfo> classes,
    std::uint32_t class_index) {
    const TopRecord* stored = nullptr;
    for (const TopRecord& record : dataset.records) {
        if (record.class_index == class_index) {
            stored = &record;
            break;
        }
    }
    if (stored == nullptr) {
        throw std::out_of_range("dataset has no record for class_index " +
                                std::to_string(class_index));
    }
    const TopRecord recomputed = compute_top_term(classes[class_index], classes);
    if (recomputed.term_value == stored->term_value &&
        recomputed.valid_count == stored->valid_count) {
        return std::nullopt;
    }
    return RecomputeMismatch{class_index, *stored, recomputed};
}

/// Evenly spread sample of `count` indices over [0, size).
std::vector<std::uint32_t> sample_indices(std::uint32_t size, std::uint64_t count) {
    std::vector<std::uint32_t> out;
    if (count >= size) {
        out.resize(size);
        for (std::uint32_t i = 0; i < size; ++i) out[i] = i;
        return out;
    }
    for (std::uint64_t i = 0; i < count; ++i) {
        out.push_back(static_cast<std::uint32_t>(i * size / count));
    }
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

std::optional<RecomputeMismatch> recompute_top(const Dataset& dataset,
                                               std::uint32_t class_index) {
    const std::vector<ClassInfo> classes = enumerate_classes(dataset.m);
    if (class_index >= classes.size()) {
        throw std::out_of_range("class_index " + std::to_string(class_index) +
                                " is outside [0, " + std::to_string(classes.size()) +
                                ")");
    }
    return recompute_with_classes(dataset, classes, class_index);
}

CountSumResult check_count_sum(const Dataset& dataset) {
    validate_complete(dataset);
    CountSumResult result;
    result.expected = tables::dedekind_number(dataset.m.value() + 1);
    result.actual = 0;
    for (const TopRecord& record : dataset.records) {
        result.actual += record.valid_count;
    }
    result.pass = result.actual == result.expected;
    return result;
}

bool check_residue(const BigInt& total, std::uint64_t modulus, std::uint64_t expected) {
    if (modulus < 2) {
        throw config_error("residue modulus must be at least 2");
    }
    return total % BigInt(modulus) == BigInt(expected);
}

std::vector<std::byte> inject_page_corruption(std::span<const std::byte> buffer,
                                              std::size_t page_size,
                                              std::size_t page_index,
                                              std::uint64_t seed) {
    if (page_size == 0) {
        throw input_shape_error("page size must be positive");
    }
    const std::size_t begin = page_index * page_size;
    if (begin >= buffer.size()) {
        throw input_shape_error("page " + std::to_string(page_index) +
                                " starts beyond the buffer");
    }
    const std::size_t end = std::min(begin + page_size, buffer.size());
    std::vector<std::byte> out(buffer.begin(), buffer.end());
    // xorshift64 fill; seed 0 would be a fixed point, nudge it away.
    std::uint64_t state = seed ? seed : 0x9e3779b97f4a7c15ull;
    for (std::size_t i = begin; i < end; ++i) {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        out[i] = static_cast<std::byte>(state & 0xFF);
    }
    return out;
}

AuditReport audit(const Dataset& dataset, const AuditOptions& options) {
    AuditReport report;

    // Structural integrity first: completeness plus representative check
    // against the class table.
    validate_complete(dataset);
    const std::vector<ClassInfo> classes = enumerate_classes(dataset.m);
    if (classes.size() != dataset.class_count) {
        throw integrity_error("dataset declares " + std::to_string(dataset.class_count) +
                              " classes but level m=" + std::to_string(dataset.m.value()) +
                              " has " + std::to_string(classes.size()));
    }
    for (const TopRecord& record : dataset.records) {
        const std::string expected_rep = to_string(classes[record.class_index].rep);
        if (record.rep != expected_rep) {
            throw integrity_error("record " + std::to_string(record.class_index) +
                                  " stores representative '" + record.rep +
                                  "' but the class table has '" + expected_rep + "'");
        }
    }

    report.total = total(dataset);

    const CountSumResult count_sum = check_count_sum(dataset);
    report.count_sum_pass = count_sum.pass;
    report.count_sum_actual = count_sum.actual;
    report.count_sum_expected = count_sum.expected;

    for (const ResidueCheck& check : options.residues) {
        ResidueResult result;
        result.modulus = check.modulus;
        result.expected = check.expected;
        result.actual = (report.total % BigInt(check.modulus)).convert_to<std::uint64_t>();
        result.pass = result.actual == check.expected;
        report.residue_results.push_back(result);
    }

    const std::vector<std::uint32_t> sample = sample_indices(
        dataset.class_count,
        options.sample.value_or(static_cast<std::uint64_t>(dataset.class_count)));
    report.checked_records = sample.size();

    std::mutex mismatch_mutex;
    std::atomic<std::size_t> next{0};
    unsigned workers = options.workers;
    if (workers == 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        workers = hw > 0 ? hw : 1;
    }
    workers = std::min<std::size_t>(workers, sample.size());
    auto work = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= sample.size()) return;
            if (auto mismatch = recompute_with_classes(dataset, classes, sample[i])) {
                std::lock_guard lock(mismatch_mutex);
                report.mismatches.push_back(std::move(*mismatch));
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    std::sort(report.mismatches.begin(), report.mismatches.end(),
              [](const RecomputeMismatch& a, const RecomputeMismatch& b) {
                  return a.class_index < b.class_index;
              });
    return report;
}

} // namespace dedekind
