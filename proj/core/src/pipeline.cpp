#include "dedekind/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "dedekind/lattice.hpp"
#include "dedekind/pcoeff.hpp"

namespace dedekind {

namespace {

std::uint64_t to_u64(const BigInt& value, const char* what) {
    if (value < 0 || value > BigInt(UINT64_MAX)) {
        throw accumulator_overflow_error(std::string(what) +
                                         " does not fit the 64-bit fast path");
    }
    return value.convert_to<std::uint64_t>();
}

unsigned resolve_workers(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("DEDEKIND_WORKERS")) {
        const long parsed = std::strtol(env, nullptr, 10);
        if (parsed > 0) return static_cast<unsigned>(parsed);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

/// Runs fn(i) for i in [0, count) on `workers` threads. Tasks are handed
/// out one at a time since per-top cost is highly uneven.
template <class Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
    workers = std::min<std::size_t>(std::max(1u, workers), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        try {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            next.store(count);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

/// True-set count per subset cardinality; permutation invariant, so a top
/// can only sit below some equivalent of a bottom whose profile dominates
/// its own.
using LayerProfile = std::array<std::uint8_t, 8>;

LayerProfile layer_profile(std::uint64_t truth, int m) {
    LayerProfile profile{};
    const unsigned n = 1u << m;
    for (unsigned s = 0; s < n; ++s) {
        if ((truth >> s) & 1u) {
            ++profile[static_cast<std::size_t>(std::popcount(s))];
        }
    }
    return profile;
}

bool profile_dominates(const LayerProfile& low, const LayerProfile& high) {
    for (std::size_t k = 0; k < low.size(); ++k) {
        if (low[k] > high[k]) return false;
    }
    return true;
}

/// Everything the per-top kernel needs, built once per run and shared
/// read-only between workers.
struct ClassTables {
    int m = 0;
    std::vector<ClassInfo> classes;
    std::vector<std::vector<std::uint64_t>> orbits;
    std::vector<std::uint64_t> down;
    std::vector<std::uint64_t> up;
    std::vector<LayerProfile> profiles;
};

ClassTables build_class_tables(BaseSize m) {
    ClassTables tables;
    tables.m = m.value();
    tables.classes = enumerate_classes(m);
    const std::size_t count = tables.classes.size();
    tables.orbits.resize(count);
    tables.down.resize(count);
    tables.up.resize(count);
    tables.profiles.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        const Mbf& rep = tables.classes[i].rep;
        tables.orbits[i] =
            detail::orbit_words64(static_cast<std::uint64_t>(rep.truth()), tables.m);
        tables.down[i] = to_u64(interval_size_down(rep), "interval size");
        tables.up[i] = to_u64(interval_size_up(rep), "interval size");
        tables.profiles[i] =
            layer_profile(static_cast<std::uint64_t>(rep.truth()), tables.m);
    }
    return tables;
}

ClassTables build_class_tables_from(std::span<const ClassInfo> classes) {
    if (classes.empty()) {
        throw config_error("class list is empty");
    }
    ClassTables tables;
    tables.m = classes.front().rep.base_size().value();
    tables.classes.assign(classes.begin(), classes.end());
    const std::size_t count = tables.classes.size();
    tables.orbits.resize(count);
    tables.down.resize(count);
    tables.up.resize(count);
    tables.profiles.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        const Mbf& rep = tables.classes[i].rep;
        if (rep.base_size().value() != tables.m) {
            throw input_shape_error("class list mixes base sizes");
        }
        tables.orbits[i] =
            detail::orbit_words64(static_cast<std::uint64_t>(rep.truth()), tables.m);
        tables.down[i] = to_u64(interval_size_down(rep), "interval size");
        tables.up[i] = to_u64(interval_size_up(rep), "interval size");
        tables.profiles[i] =
            layer_profile(static_cast<std::uint64_t>(rep.truth()), tables.m);
    }
    return tables;
}

void validate_top_class(const ClassInfo& alpha_class,
                        std::span<const ClassInfo> classes) {
    if (alpha_class.class_index >= classes.size() ||
        !(classes[alpha_class.class_index].rep == alpha_class.rep)) {
        throw config_error("top class does not match its position in the class list");
    }
}

std::vector<BottomSample> bottom_buffer_impl(const ClassTables& tables,
                                             std::uint32_t top_index,
                                             bool use_prescreen,
                                             std::uint64_t* pairs_evaluated) {
    const std::uint64_t alpha =
        static_cast<std::uint64_t>(tables.classes[top_index].rep.truth());
    const LayerProfile alpha_profile = tables.profiles[top_index];
    std::vector<BottomSample> buffer(tables.classes.size());
    for (std::size_t b = 0; b < tables.classes.size(); ++b) {
        if (use_prescreen && !profile_dominates(alpha_profile, tables.profiles[b])) {
            continue;
        }
        const detail::PermSumWords sum =
            detail::permutation_sum_words(alpha, tables.orbits[b], tables.m);
        if (pairs_evaluated != nullptr) ++*pairs_evaluated;
        buffer[b] = BottomSample{sum.pcoeff_sum, sum.valid_count};
    }
    return buffer;
}

TopRecord aggregate_impl(const ClassTables& tables, std::uint32_t top_index,
                         std::span<const BottomSample> buffer,
                         const PipelineOptions& options) {
    if (buffer.size() != tables.classes.size()) {
        throw input_shape_error("bottom buffer size does not match class count");
    }
    const ClassInfo& alpha_class = tables.classes[top_index];
    WideAccumulator inner(options.accumulator_bits);
    WideAccumulator valid_total(options.accumulator_bits);
    for (std::size_t b = 0; b < buffer.size(); ++b) {
        if (buffer[b].pcoeff_sum == 0 && buffer[b].valid_count == 0) continue;
        WideAccumulator term(options.accumulator_bits);
        term.add(buffer[b].pcoeff_sum);
        term.multiply(tables.up[b]);
        inner.add(term);
        valid_total.add(buffer[b].valid_count);
    }
    inner.multiply(alpha_class.orbit_size);
    inner.multiply(tables.down[top_index]);
    valid_total.multiply(alpha_class.orbit_size);

    TopRecord record;
    record.class_index = alpha_class.class_index;
    record.rep = to_string(alpha_class.rep);
    record.term_value = inner.value();
    record.valid_count = valid_total.value();
    return record;
}

void validate_job_manifests(std::span<const JobManifest> manifests, BaseSize m,
                            std::uint32_t class_count) {
    if (manifests.empty()) {
        throw config_error("no job manifests given");
    }
    std::vector<JobManifest> sorted(manifests.begin(), manifests.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const JobManifest& a, const JobManifest& b) { return a.lo < b.lo; });
    std::uint32_t expected_lo = 0;
    std::vector<bool> ids_seen;
    for (const JobManifest& manifest : sorted) {
        if (manifest.m != m) {
            throw config_error("job " + std::to_string(manifest.job_id) +
                               " has mismatched base size");
        }
        if (manifest.mode != JobManifest::Mode::Class || manifest.dedup) {
            throw config_error("run_jobs handles class-mode, non-dedup jobs only");
        }
        if (manifest.job_id >= manifests.size()) {
            throw config_error("job ids must be dense in [0, job count)");
        }
        if (ids_seen.size() < manifests.size()) ids_seen.resize(manifests.size(), false);
        if (ids_seen[manifest.job_id]) {
            throw config_error("duplicate job id " + std::to_string(manifest.job_id));
        }
        ids_seen[manifest.job_id] = true;
        if (manifest.lo != expected_lo) {
            throw config_error(
                manifest.lo < expected_lo
                    ? "job ranges overlap at class " + std::to_string(manifest.lo)
                    : "job ranges leave a gap before class " + std::to_string(manifest.lo));
        }
        if (manifest.hi < manifest.lo) {
            throw config_error("job " + std::to_string(manifest.job_id) +
                               " has a reversed range");
        }
        expected_lo = manifest.hi;
    }
    if (expected_lo != class_count) {
        throw config_error("job ranges cover [0, " + std::to_string(expected_lo) +
                           ") but there are " + std::to_string(class_count) +
                           " top classes");
    }
}

Dataset run_jobs_with_tables(const ClassTables& tables,
                             std::span<const JobManifest> manifests,
                             DatasetSink& sink, const PipelineOptions& options,
                             RunStats* stats) {
    const BaseSize m(tables.m);
    const std::uint32_t class_count = static_cast<std::uint32_t>(tables.classes.size());
    validate_job_manifests(manifests, m, class_count);

    std::vector<TopRecord> records(class_count);
    std::vector<const JobManifest*> to_compute;
    for (const JobManifest& manifest : manifests) {
        if (auto loaded = sink.load_complete_part(manifest, class_count)) {
            if (loaded->size() != manifest.hi - manifest.lo) {
                throw integrity_error("part for job " + std::to_string(manifest.job_id) +
                                      " has wrong record count");
            }
            for (std::size_t i = 0; i < loaded->size(); ++i) {
                TopRecord& record = (*loaded)[i];
                if (record.class_index != manifest.lo + i) {
                    throw integrity_error("part for job " +
                                          std::to_string(manifest.job_id) +
                                          " has out-of-range class_index " +
                                          std::to_string(record.class_index));
                }
                records[record.class_index] = std::move(record);
            }
            if (stats != nullptr) ++stats->jobs_skipped;
        } else {
            to_compute.push_back(&manifest);
            if (stats != nullptr) ++stats->jobs_run;
        }
    }

    std::vector<std::uint32_t> pending;
    for (const JobManifest* manifest : to_compute) {
        for (std::uint32_t top = manifest->lo; top < manifest->hi; ++top) {
            pending.push_back(top);
        }
    }

    std::atomic<std::uint64_t> pairs{0};
    parallel_for(pending.size(), resolve_workers(options.workers), [&](std::size_t i) {
        const std::uint32_t top = pending[i];
        std::uint64_t local_pairs = 0;
        const std::vector<BottomSample> buffer =
            bottom_buffer_impl(tables, top, options.use_prescreen, &local_pairs);
        records[top] = aggregate_impl(tables, top, buffer, options);
        pairs.fetch_add(local_pairs, std::memory_order_relaxed);
    });
    if (stats != nullptr) stats->pairs_evaluated += pairs.load();

    for (const JobManifest* manifest : to_compute) {
        sink.store_part(*manifest, class_count,
                        std::span<const TopRecord>(records.data() + manifest->lo,
                                                   manifest->hi - manifest->lo));
    }

    Dataset dataset{m, class_count, std::move(records)};
    BigInt grand_total = 0;
    for (const TopRecord& record : dataset.records) grand_total += record.term_value;
    dataset.stored_total = grand_total;
    sink.store_merged(dataset);
    return dataset;
}

} // namespace

BigInt compute_direct(BaseSize m, RunStats* stats) {
    if (m.value() > 3) {
        throw capability_error(
            "direct mode scans all of D_m x D_m and supports m <= 3");
    }
    const LatticeIndex index = enumerate_mbfs(m);
    const std::size_t n = index.size();
    std::vector<BigInt> down(n);
    std::vector<BigInt> up(n);
    for (std::size_t i = 0; i < n; ++i) {
        down[i] = interval_size_down(index.mbf_at(i));
        up[i] = interval_size_up(index.mbf_at(i));
    }
    BigInt total = 0;
    std::uint64_t pairs = 0;
    for (std::size_t a = 0; a < n; ++a) {
        const Mbf alpha = index.mbf_at(a);
        for (std::size_t b = 0; b < n; ++b) {
            if ((index.word_at(a) & ~index.word_at(b)) != 0) continue;
            const Mbf beta = index.mbf_at(b);
            total += down[a] * pcoeff_value(alpha, beta) * up[b];
            ++pairs;
        }
    }
    if (stats != nullptr) stats->pairs_evaluated += pairs;
    return total;
}

std::vector<BottomSample> compute_bottom_buffer(const ClassInfo& alpha_class,
                                                std::span<const ClassInfo> classes,
                                                const PipelineOptions& options) {
    validate_top_class(alpha_class, classes);
    const ClassTables tables = build_class_tables_from(classes);
    return bottom_buffer_impl(tables, alpha_class.class_index, options.use_prescreen,
                              nullptr);
}

TopRecord aggregate_bottom_buffer(const ClassInfo& alpha_class,
                                  std::span<const ClassInfo> classes,
                                  std::span<const BottomSample> buffer,
                                  const PipelineOptions& options) {
    validate_top_class(alpha_class, classes);
    const ClassTables tables = build_class_tables_from(classes);
    return aggregate_impl(tables, alpha_class.class_index, buffer, options);
}

TopRecord compute_top_term(const ClassInfo& alpha_class,
                           std::span<const ClassInfo> classes,
                           const PipelineOptions& options) {
    validate_top_class(alpha_class, classes);
    const ClassTables tables = build_class_tables_from(classes);
    const std::vector<BottomSample> buffer = bottom_buffer_impl(
        tables, alpha_class.class_index, options.use_prescreen, nullptr);
    return aggregate_impl(tables, alpha_class.class_index, buffer, options);
}

BigInt compute_dedup(BaseSize m, const PipelineOptions& options, RunStats* stats) {
    if (m.value() > 5) {
        throw capability_error("dedup mode supports m <= 5 at desk scale");
    }
    const ClassTables tables = build_class_tables(m);
    const std::size_t count = tables.classes.size();

    // Class of the dual of each representative; the mirror map on pairs is
    // (A, B) -> (dual_class[B], dual_class[A]).
    std::vector<std::uint32_t> dual_class(count);
    std::vector<std::uint64_t> rep_words(count);
    for (std::size_t i = 0; i < count; ++i) {
        rep_words[i] = static_cast<std::uint64_t>(tables.classes[i].rep.truth());
    }
    for (std::size_t i = 0; i < count; ++i) {
        const std::uint64_t dual_canon = detail::canonical_word64(
            static_cast<std::uint64_t>(dual(tables.classes[i].rep).truth()), tables.m);
        const auto it = std::lower_bound(rep_words.begin(), rep_words.end(), dual_canon);
        if (it == rep_words.end() || *it != dual_canon) {
            throw invariant_error("dual of a class representative left the class list");
        }
        dual_class[i] = static_cast<std::uint32_t>(it - rep_words.begin());
    }

    const unsigned workers = resolve_workers(options.workers);
    std::vector<BigInt> partial(count);
    std::atomic<std::uint64_t> pairs{0};
    parallel_for(count, workers, [&](std::size_t a) {
        BigInt row_total = 0;
        std::uint64_t row_pairs = 0;
        const std::uint64_t alpha = rep_words[a];
        for (std::size_t b = 0; b < count; ++b) {
            const std::uint64_t mirror_first = rep_words[dual_class[b]];
            const std::uint64_t mirror_second = rep_words[dual_class[a]];
            // The lexicographically smaller of (rep_A, rep_B) and its
            // mirror is the pair orbit representative.
            if (rep_words[a] > mirror_first ||
                (rep_words[a] == mirror_first && rep_words[b] > mirror_second)) {
                continue;
            }
            const unsigned weight =
                (rep_words[a] == mirror_first && rep_words[b] == mirror_second) ? 1 : 2;
            if (options.use_prescreen &&
                !profile_dominates(tables.profiles[a], tables.profiles[b])) {
                continue;
            }
            const detail::PermSumWords sum =
                detail::permutation_sum_words(alpha, tables.orbits[b], tables.m);
            ++row_pairs;
            if (sum.valid_count == 0) continue;
            WideAccumulator term(options.accumulator_bits);
            term.add(sum.pcoeff_sum);
            term.multiply(tables.up[b]);
            term.multiply(tables.down[a]);
            term.multiply(tables.classes[a].orbit_size);
            term.multiply(weight);
            row_total += term.value();
        }
        partial[a] = std::move(row_total);
        pairs.fetch_add(row_pairs, std::memory_order_relaxed);
    });
    if (stats != nullptr) stats->pairs_evaluated += pairs.load();

    BigInt total = 0;
    for (const BigInt& row : partial) total += row;
    return total;
}

std::optional<std::vector<TopRecord>> MemorySink::load_complete_part(
    const JobManifest& manifest, std::uint32_t class_count) {
    (void)class_count;
    const auto it = parts_.find(manifest.job_id);
    if (it == parts_.end()) return std::nullopt;
    return it->second;
}

void MemorySink::store_part(const JobManifest& manifest, std::uint32_t class_count,
                            std::span<const TopRecord> records) {
    (void)class_count;
    parts_[manifest.job_id] = std::vector<TopRecord>(records.begin(), records.end());
}

void MemorySink::store_merged(const Dataset& dataset) { merged_ = dataset; }

FileSink::FileSink(std::filesystem::path parts_dir, std::filesystem::path merged_path)
    : parts_dir_(std::move(parts_dir)), merged_path_(std::move(merged_path)) {}

std::filesystem::path FileSink::part_path(std::uint32_t job_id) const {
    return parts_dir_ / ("part-" + std::to_string(job_id) + ".txt");
}

std::optional<std::vector<TopRecord>> FileSink::load_complete_part(
    const JobManifest& manifest, std::uint32_t class_count) {
    const std::filesystem::path path = part_path(manifest.job_id);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::optional<PartFile> part;
    try {
        part = read_part_file(in);
    } catch (const parse_error&) {
        // Incomplete or truncated part from a crashed run: recompute it.
        return std::nullopt;
    }
    if (part->manifest.m != manifest.m || part->manifest.lo != manifest.lo ||
        part->manifest.hi != manifest.hi || part->class_count != class_count) {
        throw integrity_error("existing part file " + path.string() +
                              " does not match the requested job range");
    }
    return std::move(part->records);
}

void FileSink::store_part(const JobManifest& manifest, std::uint32_t class_count,
                          std::span<const TopRecord> records) {
    std::filesystem::create_directories(parts_dir_);
    const std::filesystem::path path = part_path(manifest.job_id);
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) {
            throw config_error("cannot write part file " + tmp.string());
        }
        write_part_file(out, manifest, class_count, records);
    }
    std::filesystem::rename(tmp, path);
}

void FileSink::store_merged(const Dataset& dataset) {
    if (merged_path_.has_parent_path()) {
        std::filesystem::create_directories(merged_path_.parent_path());
    }
    const std::filesystem::path tmp = merged_path_.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) {
            throw config_error("cannot write dataset file " + tmp.string());
        }
        write_dataset(out, dataset, /*with_total=*/true);
    }
    std::filesystem::rename(tmp, merged_path_);
}

Dataset run_jobs(BaseSize m, std::span<const JobManifest> manifests,
                 DatasetSink& sink, const PipelineOptions& options, RunStats* stats) {
    const ClassTables tables = build_class_tables(m);
    return run_jobs_with_tables(tables, manifests, sink, options, stats);
}

Dataset run_sharded(BaseSize m, std::uint32_t jobs, DatasetSink& sink,
                    const PipelineOptions& options, RunStats* stats) {
    const ClassTables tables = build_class_tables(m);
    const std::vector<JobManifest> manifests =
        make_manifests(m, static_cast<std::uint32_t>(tables.classes.size()), jobs);
    return run_jobs_with_tables(tables, manifests, sink, options, stats);
}

BigInt compute_class_total(BaseSize m, const PipelineOptions& options,
                           RunStats* stats) {
    MemorySink sink;
    const Dataset dataset = run_sharded(m, 1, sink, options, stats);
    return *dataset.stored_total;
}

BigInt total(const Dataset& dataset) {
    validate_complete(dataset);
    BigInt sum = 0;
    for (const TopRecord& record : dataset.records) sum += record.term_value;
    if (dataset.stored_total && *dataset.stored_total != sum) {
        throw integrity_error("dataset trailer total " + dataset.stored_total->str() +
                              " does not match record sum " + sum.str());
    }
    return sum;
}

void write_part_file(std::ostream& out, const JobManifest& manifest,
                     std::uint32_t class_count, std::span<const TopRecord> records) {
    out << "DEDEKIND-JOB v1 m=" << manifest.m.value() << " job=" << manifest.job_id
        << " lo=" << manifest.lo << " hi=" << manifest.hi
        << " classes=" << class_count << '\n';
    for (const TopRecord& record : records) {
        out << record_line(record) << '\n';
    }
    out << "END " << records.size() << '\n';
}

PartFile read_part_file(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw parse_error(1, "empty part file");
    }
    std::istringstream header(line);
    std::string magic, version, m_field, job_field, lo_field, hi_field, classes_field;
    header >> magic >> version >> m_field >> job_field >> lo_field >> hi_field >>
        classes_field;
    auto field_value = [&](const std::string& field, const char* prefix) {
        const std::string want = std::string(prefix) + "=";
        if (field.rfind(want, 0) != 0) {
            throw parse_error(1, "malformed part header field '" + field + "'");
        }
        return field.substr(want.size());
    };
    if (magic != "DEDEKIND-JOB" || version != "v1") {
        throw parse_error(1, "not a part file");
    }
    const int m_value = static_cast<int>(parse_bigint(field_value(m_field, "m")));
    if (m_value < 0 || m_value > 7) {
        throw parse_error(1, "base size out of range in part header");
    }
    PartFile part{JobManifest{BaseSize(m_value)}};
    part.manifest.job_id =
        parse_bigint(field_value(job_field, "job")).convert_to<std::uint32_t>();
    part.manifest.lo =
        parse_bigint(field_value(lo_field, "lo")).convert_to<std::uint32_t>();
    part.manifest.hi =
        parse_bigint(field_value(hi_field, "hi")).convert_to<std::uint32_t>();
    part.class_count =
        parse_bigint(field_value(classes_field, "classes")).convert_to<std::uint32_t>();

    bool complete = false;
    std::size_t line_number = 1;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty()) continue;
        if (line.rfind("END ", 0) == 0) {
            const BigInt count = parse_bigint(line.substr(4));
            if (count != BigInt(part.records.size())) {
                throw parse_error(line_number, "END count does not match records");
            }
            complete = true;
            break;
        }
        part.records.push_back(parse_record_line(line, line_number));
    }
    if (!complete) {
        throw parse_error(line_number, "part file has no END marker");
    }
    return part;
}

Dataset merge_parts(BaseSize m, std::uint32_t class_count,
                    std::span<const PartFile> parts) {
    std::vector<const PartFile*> ordered;
    for (const PartFile& part : parts) ordered.push_back(&part);
    std::sort(ordered.begin(), ordered.end(), [](const PartFile* a, const PartFile* b) {
        return a->manifest.lo < b->manifest.lo;
    });
    Dataset dataset{m, class_count};
    std::uint32_t expected = 0;
    for (const PartFile* part : ordered) {
        if (part->manifest.m != m) {
            throw integrity_error("part " + std::to_string(part->manifest.job_id) +
                                  " has mismatched base size");
        }
        if (part->class_count != class_count) {
            throw integrity_error("part " + std::to_string(part->manifest.job_id) +
                                  " was produced for a different class count");
        }
        if (part->manifest.lo != expected) {
            throw integrity_error(
                part->manifest.lo < expected
                    ? "parts overlap at class " + std::to_string(part->manifest.lo)
                    : "parts leave a gap before class " +
                          std::to_string(part->manifest.lo));
        }
        if (part->records.size() != part->manifest.hi - part->manifest.lo) {
            throw integrity_error("part " + std::to_string(part->manifest.job_id) +
                                  " has wrong record count");
        }
        for (std::size_t i = 0; i < part->records.size(); ++i) {
            if (part->records[i].class_index != part->manifest.lo + i) {
                throw integrity_error("part " + std::to_string(part->manifest.job_id) +
                                      " record order is broken at class " +
                                      std::to_string(part->records[i].class_index));
            }
            dataset.records.push_back(part->records[i]);
        }
        expected = part->manifest.hi;
    }
    if (expected != class_count) {
        throw integrity_error("parts cover [0, " + std::to_string(expected) +
                              ") but the dataset needs " + std::to_string(class_count) +
                              " records");
    }
    BigInt grand_total = 0;
    for (const TopRecord& record : dataset.records) grand_total += record.term_value;
    dataset.stored_total = grand_total;
    return dataset;
}

} // namespace dedekind
