#include "dedekind/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dedekind/equiv.hpp"
#include "dedekind/lattice.hpp"
#include "dedekind/pcoeff.hpp"
#include "dedekind/pipeline.hpp"
#include "dedekind/verify.hpp"

namespace dedekind::cli {

namespace {

/// Flag combinations the option parser cannot express; maps to exit 2.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ComputeConfig {
    int m = 0;
    std::uint32_t jobs = 1;
    unsigned workers = 0;
    unsigned accumulator_bits = WideAccumulator::kMaxBits;
    bool dedup = false;
    bool direct = false;
    bool allow_long_run = false;
    std::string out_path;
};

Dataset load_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw config_error("cannot open dataset file " + path);
    }
    return read_dataset(in);
}

ResidueCheck parse_residue_arg(const std::string& arg) {
    const std::size_t eq = arg.find('=');
    if (eq == std::string::npos) {
        throw config_error("residue must be MODULUS=EXPECTED, got '" + arg + "'");
    }
    ResidueCheck check;
    check.modulus = parse_bigint(arg.substr(0, eq)).convert_to<std::uint64_t>();
    check.expected = parse_bigint(arg.substr(eq + 1)).convert_to<std::uint64_t>();
    return check;
}

int run_enumerate(int m_value, bool list, std::ostream& out) {
    const BaseSize m(m_value);
    const LatticeIndex index = enumerate_mbfs(m);
    out << "D(" << m_value << ") = " << index.size() << '\n';
    if (list) {
        for (std::size_t i = 0; i < index.size(); ++i) {
            out << to_string(index.mbf_at(i)) << '\n';
        }
    }
    return 0;
}

int run_classes(int m_value, bool table, std::ostream& out) {
    const BaseSize m(m_value);
    const std::vector<ClassInfo> classes = enumerate_classes(m);
    out << "R(" << m_value << ") = " << classes.size() << '\n';
    if (table) {
        for (const ClassInfo& cls : classes) {
            out << cls.class_index << '\t' << to_string(cls.rep) << '\t'
                << cls.orbit_size << '\n';
        }
    }
    return 0;
}

int run_pcoeff(const std::string& alpha_text, const std::string& gamma_text,
               std::ostream& out) {
    const Mbf alpha = parse_mbf(alpha_text);
    const Mbf gamma = parse_mbf(gamma_text);
    if (alpha.base_size() != gamma.base_size()) {
        throw input_shape_error("alpha and gamma have different base sizes");
    }
    if (!leq(alpha, gamma)) {
        throw invariant_error("pcoeff requires alpha <= gamma");
    }
    const int c = connector_count(alpha, gamma);
    out << "C=" << c << " pcoeff=" << pcoeff_value(alpha, gamma).str() << '\n';
    return 0;
}

int run_compute(const ComputeConfig& config, std::ostream& out) {
    if (config.direct && config.dedup) {
        throw usage_error("--direct and --dedup are mutually exclusive");
    }
    if ((config.direct || config.dedup) && !config.out_path.empty()) {
        throw usage_error("per-top datasets exist in class mode only; drop --out");
    }
    const BaseSize m(config.m);
    PipelineOptions options;
    options.workers = config.workers;
    options.accumulator_bits = config.accumulator_bits;
    RunStats stats;

    if (config.direct) {
        const BigInt value = compute_direct(m, &stats);
        out << "D(" << config.m + 2 << ") = " << value.str() << '\n';
        out << "pairs_evaluated=" << stats.pairs_evaluated << " mode=direct\n";
        return 0;
    }
    if (config.dedup) {
        const BigInt value = compute_dedup(m, options, &stats);
        out << "D(" << config.m + 2 << ") = " << value.str() << '\n';
        out << "pairs_evaluated=" << stats.pairs_evaluated << " mode=dedup\n";
        return 0;
    }

    if (config.m > 6) {
        throw capability_error("class mode supports m <= 6");
    }
    if (config.m == 6 && !config.allow_long_run) {
        throw capability_error(
            "m=6 is an hours-long run; pass --allow-long-run to confirm");
    }

    Dataset dataset{m};
    if (config.out_path.empty()) {
        MemorySink sink;
        dataset = run_sharded(m, config.jobs, sink, options, &stats);
    } else {
        FileSink sink(config.out_path + ".parts", config.out_path);
        dataset = run_sharded(m, config.jobs, sink, options, &stats);
        const std::vector<JobManifest> manifests =
            make_manifests(m, dataset.class_count, config.jobs);
        std::ofstream manifest_out(config.out_path + ".manifest");
        write_manifests(manifest_out, manifests);
    }
    out << "D(" << config.m + 2 << ") = " << dataset.stored_total->str() << '\n';
    out << "pairs_evaluated=" << stats.pairs_evaluated << " mode=class jobs_run="
        << stats.jobs_run << " jobs_skipped=" << stats.jobs_skipped << '\n';
    return 0;
}

int run_merge(const std::string& out_path, const std::vector<std::string>& part_paths,
              std::ostream& out) {
    std::vector<PartFile> parts;
    for (const std::string& path : part_paths) {
        std::ifstream in(path);
        if (!in) {
            throw config_error("cannot open part file " + path);
        }
        parts.push_back(read_part_file(in));
    }
    if (parts.empty()) {
        throw config_error("no part files given");
    }
    const BaseSize m = parts.front().manifest.m;
    const std::uint32_t class_count = parts.front().class_count;
    const Dataset dataset = merge_parts(m, class_count, parts);
    std::ofstream file(out_path);
    if (!file) {
        throw config_error("cannot write dataset file " + out_path);
    }
    write_dataset(file, dataset, /*with_total=*/true);
    out << "records=" << dataset.records.size() << " total="
        << dataset.stored_total->str() << '\n';
    return 0;
}

int run_total(const std::string& dataset_path, std::ostream& out) {
    const Dataset dataset = load_dataset(dataset_path);
    out << "total=" << total(dataset).str() << '\n';
    return 0;
}

int run_stats(const std::string& dataset_path, std::ostream& out) {
    const Dataset dataset = load_dataset(dataset_path);
    validate_complete(dataset);
    BigInt term_sum = 0;
    BigInt valid_sum = 0;
    for (const TopRecord& record : dataset.records) {
        term_sum += record.term_value;
        valid_sum += record.valid_count;
    }
    out << "records=" << dataset.records.size() << " total=" << term_sum.str()
        << " valid_sum=" << valid_sum.str() << '\n';
    return 0;
}

int run_verify(const std::string& dataset_path, std::optional<std::uint64_t> sample,
               bool all, const std::vector<std::string>& residue_args,
               unsigned workers, std::ostream& out) {
    const Dataset dataset = load_dataset(dataset_path);
    AuditOptions options;
    options.workers = workers;
    if (all) {
        options.sample.reset();
    } else if (sample) {
        options.sample = *sample;
    } else {
        options.sample = std::min<std::uint64_t>(8, dataset.records.size());
    }
    for (const std::string& arg : residue_args) {
        options.residues.push_back(parse_residue_arg(arg));
    }

    AuditReport report;
    try {
        report = audit(dataset, options);
    } catch (const integrity_error& e) {
        out << "FAIL integrity " << e.what() << '\n';
        return 1;
    }

    BigInt valid_sum = 0;
    for (const TopRecord& record : dataset.records) valid_sum += record.valid_count;
    out << "records=" << dataset.records.size() << " total=" << report.total.str()
        << " valid_sum=" << valid_sum.str() << '\n';
    if (report.count_sum_pass) {
        out << "count_sum=pass actual=" << report.count_sum_actual.str() << '\n';
    } else {
        out << "FAIL count-sum actual=" << report.count_sum_actual.str()
            << " expected=" << report.count_sum_expected.str() << '\n';
    }
    for (const ResidueResult& r : report.residue_results) {
        if (r.pass) {
            out << "residue_" << r.modulus << "=pass actual=" << r.actual << '\n';
        } else {
            out << "FAIL residue modulus=" << r.modulus << " actual=" << r.actual
                << " expected=" << r.expected << '\n';
        }
    }
    out << "recompute_checked=" << report.checked_records
        << " recompute_mismatches=" << report.mismatches.size() << '\n';
    for (const RecomputeMismatch& mismatch : report.mismatches) {
        out << "FAIL recompute class_index=" << mismatch.class_index
            << " stored_term=" << mismatch.stored.term_value.str()
            << " recomputed_term=" << mismatch.recomputed.term_value.str()
            << " stored_valid=" << mismatch.stored.valid_count.str()
            << " recomputed_valid=" << mismatch.recomputed.valid_count.str() << '\n';
    }
    return report.ok() ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dedekind number computation via the P-coefficient class formula"};
    app.require_subcommand(1);

    int m_value = 0;
    bool list_flag = false;
    bool table_flag = false;
    std::string alpha_text, gamma_text;
    ComputeConfig compute_config;
    std::string out_path, dataset_path;
    std::vector<std::string> part_paths;
    std::optional<std::uint64_t> sample;
    std::uint64_t sample_value = 0;
    bool all_flag = false;
    std::vector<std::string> residue_args;
    unsigned verify_workers = 0;

    CLI::App* enumerate_cmd =
        app.add_subcommand("enumerate", "Enumerate D_m and print its size");
    enumerate_cmd->add_option("--m", m_value, "base set size")->required();
    enumerate_cmd->add_flag("--list", list_flag, "print every function");

    CLI::App* classes_cmd =
        app.add_subcommand("classes", "Count equivalence classes R(m)");
    classes_cmd->add_option("--m", m_value, "base set size")->required();
    classes_cmd->add_flag("--table", table_flag, "print rep and orbit size per class");

    CLI::App* pcoeff_cmd =
        app.add_subcommand("pcoeff", "Connector number and P-coefficient of one pair");
    pcoeff_cmd->add_option("--alpha", alpha_text, "serialized top, e.g. m=2:1")
        ->required();
    pcoeff_cmd->add_option("--gamma", gamma_text, "serialized bottom")->required();

    CLI::App* compute_cmd = app.add_subcommand("compute", "Compute D(m+2)");
    compute_cmd->add_option("--m", compute_config.m, "base set size of the inner lattice")
        ->required();
    compute_cmd->add_option("--jobs", compute_config.jobs, "number of job shards");
    compute_cmd->add_option("--workers", compute_config.workers,
                            "worker threads (default: DEDEKIND_WORKERS or hardware)");
    compute_cmd->add_flag("--dedup", compute_config.dedup,
                          "evaluate one pair per dual-mirror orbit");
    compute_cmd->add_flag("--direct", compute_config.direct,
                          "direct double loop over D_m pairs (m <= 3)");
    compute_cmd->add_option("--out", compute_config.out_path,
                            "write the per-top dataset here");
    compute_cmd->add_flag("--allow-long-run", compute_config.allow_long_run,
                          "permit the m=6 run");
    compute_cmd->add_option("--accumulator-bits", compute_config.accumulator_bits,
                            "checked accumulator capacity (testing knob)");

    CLI::App* merge_cmd = app.add_subcommand("merge", "Merge job parts into a dataset");
    merge_cmd->add_option("--out", out_path, "merged dataset path")->required();
    merge_cmd->add_option("parts", part_paths, "part files")->required();

    CLI::App* total_cmd = app.add_subcommand("total", "Sum a complete dataset");
    total_cmd->add_option("--dataset", dataset_path, "dataset path")->required();

    CLI::App* stats_cmd = app.add_subcommand("stats", "Machine-readable dataset facts");
    stats_cmd->add_option("--dataset", dataset_path, "dataset path")->required();

    CLI::App* verify_cmd = app.add_subcommand("verify", "Audit a dataset");
    verify_cmd->add_option("--dataset", dataset_path, "dataset path")->required();
    CLI::Option* sample_opt =
        verify_cmd->add_option("--sample", sample_value, "recompute N records");
    verify_cmd->add_flag("--all", all_flag, "recompute every record")
        ->excludes(sample_opt);
    verify_cmd->add_option("--residue", residue_args,
                           "residue check as MODULUS=EXPECTED (repeatable)");
    verify_cmd->add_option("--workers", verify_workers, "recompute worker threads");

    std::vector<const char*> argv;
    argv.push_back("dedekind");
    for (const std::string& arg : args) argv.push_back(arg.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(enumerate_cmd)) return run_enumerate(m_value, list_flag, out);
        if (app.got_subcommand(classes_cmd)) return run_classes(m_value, table_flag, out);
        if (app.got_subcommand(pcoeff_cmd)) return run_pcoeff(alpha_text, gamma_text, out);
        if (app.got_subcommand(compute_cmd)) return run_compute(compute_config, out);
        if (app.got_subcommand(merge_cmd)) return run_merge(out_path, part_paths, out);
        if (app.got_subcommand(total_cmd)) return run_total(dataset_path, out);
        if (app.got_subcommand(stats_cmd)) return run_stats(dataset_path, out);
        if (app.got_subcommand(verify_cmd)) {
            if (sample_opt->count() > 0) sample = sample_value;
            return run_verify(dataset_path, sample, all_flag, residue_args,
                              verify_workers, out);
        }
        err << "error: no subcommand\n";
        return 2;
    } catch (const usage_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const capability_error& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const accumulator_overflow_error& e) {
        err << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace dedekind::cli
