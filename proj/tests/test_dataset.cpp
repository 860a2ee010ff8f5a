#include <doctest.h>

#include <sstream>

#include "dedekind/dataset.hpp"

using namespace dedekind;

namespace {

Dataset tiny_dataset() {
    Dataset dataset{BaseSize(1), 3};
    dataset.records = {
        TopRecord{0, "m=1:0", BigInt(9), BigInt(3)},
        TopRecord{1, "m=1:1", BigInt(8), BigInt(2)},
        TopRecord{2, "m=1:3", BigInt(3), BigInt(1)},
    };
    return dataset;
}

} // namespace

TEST_SUITE("dataset") {

TEST_CASE("record lines round-trip") {
    const TopRecord record{7, "m=3:1f", BigInt("123456789012345678901"), BigInt(42)};
    CHECK(record_line(record) == "7\tm=3:1f\t123456789012345678901\t42");
    CHECK(parse_record_line(record_line(record), 1) == record);
}

TEST_CASE("record line errors carry the line number") {
    try {
        parse_record_line("1\tm=1:0\txyz\t2", 17);
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line() == 17);
    }
    CHECK_THROWS_AS(parse_record_line("1\tm=1:0\t5", 3), parse_error);
}

TEST_CASE("manifest line format is exact") {
    JobManifest manifest{BaseSize(5)};
    manifest.job_id = 2;
    manifest.lo = 60;
    manifest.hi = 90;
    CHECK(manifest_line(manifest) == "JOB 2 RANGE 60 90 MODE class DEDUP 0");
    const JobManifest parsed =
        parse_manifest_line("JOB 2 RANGE 60 90 MODE class DEDUP 0", BaseSize(5));
    CHECK(parsed.job_id == 2);
    CHECK(parsed.lo == 60);
    CHECK(parsed.hi == 90);
    CHECK(parsed.mode == JobManifest::Mode::Class);
    CHECK_FALSE(parsed.dedup);

    const JobManifest dedup_direct =
        parse_manifest_line("JOB 0 RANGE 0 1 MODE direct DEDUP 1", BaseSize(2));
    CHECK(dedup_direct.mode == JobManifest::Mode::Direct);
    CHECK(dedup_direct.dedup);
}

TEST_CASE("manifest parse rejects malformed lines") {
    CHECK_THROWS_AS(parse_manifest_line("JOB x RANGE 0 1 MODE class DEDUP 0", BaseSize(2)),
                    parse_error);
    CHECK_THROWS_AS(parse_manifest_line("JOB 0 RANGE 5 1 MODE class DEDUP 0", BaseSize(2)),
                    parse_error);
    CHECK_THROWS_AS(parse_manifest_line("JOB 0 RANGE 0 1 MODE magic DEDUP 0", BaseSize(2)),
                    parse_error);
    CHECK_THROWS_AS(parse_manifest_line("JOB 0 RANGE 0 1 MODE class DEDUP 2", BaseSize(2)),
                    parse_error);
    CHECK_THROWS_AS(parse_manifest_line("JOB 0 RANGE 0 1 MODE class", BaseSize(2)),
                    parse_error);
}

TEST_CASE("manifest files round-trip") {
    const std::vector<JobManifest> manifests = make_manifests(BaseSize(3), 10, 3);
    std::stringstream stream;
    write_manifests(stream, manifests);
    const std::vector<JobManifest> back = read_manifests(stream, BaseSize(3));
    REQUIRE(back.size() == manifests.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
        CHECK(manifest_line(back[i]) == manifest_line(manifests[i]));
    }
}

TEST_CASE("make_manifests partitions the class range") {
    for (std::uint32_t classes : {1u, 7u, 10u, 210u}) {
        for (std::uint32_t jobs : {1u, 2u, 3u, 7u, 300u}) {
            const std::vector<JobManifest> manifests =
                make_manifests(BaseSize(3), classes, jobs);
            std::uint32_t expected_lo = 0;
            for (const JobManifest& manifest : manifests) {
                CHECK(manifest.lo == expected_lo);
                CHECK(manifest.hi >= manifest.lo);
                expected_lo = manifest.hi;
            }
            CHECK(expected_lo == classes);
            CHECK(manifests.size() == std::min(jobs, classes));
        }
    }
    CHECK_THROWS_AS(make_manifests(BaseSize(3), 10, 0), config_error);
}

TEST_CASE("dataset files round-trip with and without the trailer") {
    const Dataset dataset = tiny_dataset();
    for (bool with_total : {false, true}) {
        std::stringstream stream;
        write_dataset(stream, dataset, with_total);
        const Dataset back = read_dataset(stream);
        CHECK(back.m == dataset.m);
        CHECK(back.class_count == dataset.class_count);
        CHECK(back.records == dataset.records);
        CHECK(back.stored_total.has_value() == with_total);
        if (with_total) CHECK(*back.stored_total == 20);
    }
}

TEST_CASE("dataset header is pinned") {
    std::stringstream stream;
    write_dataset(stream, tiny_dataset(), true);
    std::string line;
    std::getline(stream, line);
    CHECK(line == "DEDEKIND-DATASET v1 m=1 classes=3");
}

TEST_CASE("dataset parse failures name the line") {
    std::stringstream empty;
    CHECK_THROWS_AS(read_dataset(empty), parse_error);

    std::stringstream bad_header("DATASET m=1\n");
    try {
        read_dataset(bad_header);
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line() == 1);
    }

    std::stringstream bad_record(
        "DEDEKIND-DATASET v1 m=1 classes=3\n0\tm=1:0\tnine\t3\n");
    try {
        read_dataset(bad_record);
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line() == 2);
    }

    std::stringstream after_total(
        "DEDEKIND-DATASET v1 m=1 classes=3\nTOTAL\t20\n0\tm=1:0\t9\t3\n");
    CHECK_THROWS_AS(read_dataset(after_total), parse_error);
}

TEST_CASE("validate_complete names the missing or duplicated index") {
    Dataset missing = tiny_dataset();
    missing.records.erase(missing.records.begin() + 1);
    CHECK_THROWS_WITH_AS(validate_complete(missing),
                         doctest::Contains("missing class_index 1"), integrity_error);

    Dataset duplicated = tiny_dataset();
    duplicated.records[2] = duplicated.records[0];
    CHECK_THROWS_WITH_AS(validate_complete(duplicated),
                         doctest::Contains("duplicates class_index 0"), integrity_error);

    CHECK_NOTHROW(validate_complete(tiny_dataset()));
}

} // TEST_SUITE
