#include "dedekind/dataset.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace dedekind {

namespace {

std::vector<std::string> split(std::string_view line, char sep) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            fields.emplace_back(line.substr(start));
            return fields;
        }
        fields.emplace_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

std::uint32_t parse_u32(std::string_view text, std::size_t line_number,
                        const char* what) {
    const BigInt value = [&] {
        try {
            return parse_bigint(text);
        } catch (const parse_error&) {
            throw parse_error(line_number,
                              std::string("invalid ") + what + " '" + std::string(text) + "'");
        }
    }();
    if (value > BigInt(UINT32_MAX)) {
        throw parse_error(line_number, std::string(what) + " out of range");
    }
    return value.convert_to<std::uint32_t>();
}

} // namespace

std::string manifest_line(const JobManifest& manifest) {
    return "JOB " + std::to_string(manifest.job_id) + " RANGE " +
           std::to_string(manifest.lo) + " " + std::to_string(manifest.hi) +
           " MODE " + (manifest.mode == JobManifest::Mode::Class ? "class" : "direct") +
           " DEDUP " + (manifest.dedup ? "1" : "0");
}

JobManifest parse_manifest_line(std::string_view line, BaseSize m,
                                std::size_t line_number) {
    const std::vector<std::string> tok = split(line, ' ');
    if (tok.size() != 9 || tok[0] != "JOB" || tok[2] != "RANGE" || tok[5] != "MODE" ||
        tok[7] != "DEDUP") {
        throw parse_error(line_number, "malformed manifest line '" + std::string(line) + "'");
    }
    JobManifest manifest{m};
    manifest.job_id = parse_u32(tok[1], line_number, "job id");
    manifest.lo = parse_u32(tok[3], line_number, "range lo");
    manifest.hi = parse_u32(tok[4], line_number, "range hi");
    if (tok[6] == "class") {
        manifest.mode = JobManifest::Mode::Class;
    } else if (tok[6] == "direct") {
        manifest.mode = JobManifest::Mode::Direct;
    } else {
        throw parse_error(line_number, "unknown mode '" + tok[6] + "'");
    }
    if (tok[8] == "0") {
        manifest.dedup = false;
    } else if (tok[8] == "1") {
        manifest.dedup = true;
    } else {
        throw parse_error(line_number, "DEDUP flag must be 0 or 1");
    }
    if (manifest.hi < manifest.lo) {
        throw parse_error(line_number, "manifest range is reversed");
    }
    return manifest;
}

void write_manifests(std::ostream& out, std::span<const JobManifest> manifests) {
    for (const JobManifest& manifest : manifests) {
        out << manifest_line(manifest) << '\n';
    }
}

std::vector<JobManifest> read_manifests(std::istream& in, BaseSize m) {
    std::vector<JobManifest> manifests;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty()) continue;
        manifests.push_back(parse_manifest_line(line, m, line_number));
    }
    return manifests;
}

std::vector<JobManifest> make_manifests(BaseSize m, std::uint32_t class_count,
                                        std::uint32_t jobs) {
    if (jobs == 0) {
        throw config_error("job count must be at least 1");
    }
    jobs = std::min(jobs, std::max(1u, class_count));
    std::vector<JobManifest> manifests;
    const std::uint32_t base = class_count / jobs;
    const std::uint32_t extra = class_count % jobs;
    std::uint32_t lo = 0;
    for (std::uint32_t id = 0; id < jobs; ++id) {
        const std::uint32_t size = base + (id < extra ? 1 : 0);
        JobManifest manifest{m};
        manifest.job_id = id;
        manifest.lo = lo;
        manifest.hi = lo + size;
        manifests.push_back(manifest);
        lo += size;
    }
    return manifests;
}

std::string record_line(const TopRecord& record) {
    return std::to_string(record.class_index) + "\t" + record.rep + "\t" +
           record.term_value.str() + "\t" + record.valid_count.str();
}

TopRecord parse_record_line(std::string_view line, std::size_t line_number) {
    const std::vector<std::string> fields = split(line, '\t');
    if (fields.size() != 4) {
        throw parse_error(line_number, "expected 4 tab-separated fields, got " +
                                           std::to_string(fields.size()));
    }
    TopRecord record;
    record.class_index = parse_u32(fields[0], line_number, "class index");
    record.rep = fields[1];
    try {
        record.term_value = parse_bigint(fields[2]);
        record.valid_count = parse_bigint(fields[3]);
    } catch (const parse_error& e) {
        throw parse_error(line_number, e.what());
    }
    return record;
}

void write_dataset(std::ostream& out, const Dataset& dataset, bool with_total) {
    out << "DEDEKIND-DATASET v1 m=" << dataset.m.value()
        << " classes=" << dataset.class_count << '\n';
    BigInt total = 0;
    for (const TopRecord& record : dataset.records) {
        out << record_line(record) << '\n';
        total += record.term_value;
    }
    if (with_total) {
        out << "TOTAL\t" << total.str() << '\n';
    }
}

Dataset read_dataset(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw parse_error(1, "empty dataset file");
    }
    const std::vector<std::string> head = split(line, ' ');
    if (head.size() != 4 || head[0] != "DEDEKIND-DATASET" || head[1] != "v1" ||
        head[2].rfind("m=", 0) != 0 || head[3].rfind("classes=", 0) != 0) {
        throw parse_error(1, "malformed dataset header '" + line + "'");
    }
    const std::uint32_t m_value = parse_u32(head[2].substr(2), 1, "base size");
    if (m_value > 7) {
        throw parse_error(1, "base size out of range in header");
    }
    Dataset dataset{BaseSize(static_cast<int>(m_value))};
    dataset.class_count = parse_u32(head[3].substr(8), 1, "class count");

    std::size_t line_number = 1;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty()) continue;
        if (line.rfind("TOTAL\t", 0) == 0) {
            try {
                dataset.stored_total = parse_bigint(line.substr(6));
            } catch (const parse_error& e) {
                throw parse_error(line_number, e.what());
            }
            continue;
        }
        if (dataset.stored_total) {
            throw parse_error(line_number, "record after TOTAL trailer");
        }
        dataset.records.push_back(parse_record_line(line, line_number));
    }
    return dataset;
}

void validate_complete(const Dataset& dataset) {
    if (dataset.records.size() != dataset.class_count) {
        // Locate the first missing or duplicated index for the message.
        std::vector<std::uint32_t> seen(dataset.class_count, 0);
        for (const TopRecord& record : dataset.records) {
            if (record.class_index < dataset.class_count) ++seen[record.class_index];
        }
        for (std::uint32_t i = 0; i < dataset.class_count; ++i) {
            if (seen[i] == 0) {
                throw integrity_error("dataset is missing class_index " + std::to_string(i));
            }
            if (seen[i] > 1) {
                throw integrity_error("dataset duplicates class_index " + std::to_string(i));
            }
        }
        throw integrity_error("dataset has records beyond class range");
    }
    for (std::uint32_t i = 0; i < dataset.class_count; ++i) {
        if (dataset.records[i].class_index != i) {
            throw integrity_error(
                dataset.records[i].class_index > i
                    ? "dataset is missing class_index " + std::to_string(i)
                    : "dataset duplicates class_index " +
                          std::to_string(dataset.records[i].class_index));
        }
    }
}

} // namespace dedekind
