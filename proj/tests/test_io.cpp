#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "belitskii/batch.hpp"
#include "belitskii/error.hpp"
#include "belitskii/io.hpp"
#include "support.hpp"

using namespace belitskii;

namespace {

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Internal;
}

} // namespace

TEST(SystemJson, RoundTrip) {
    for (size_t k = 0; k < 100; ++k) {
        Rng rng = make_rng(51, k);
        DimensionVector d = random_dims(rng, 0, 6, 0);
        SystemTriple s(belitskii::testing::random_matrix(rng, d.n, d.n, true), belitskii::testing::random_matrix(rng, d.n, d.m, true),
                       belitskii::testing::random_matrix(rng, d.l, d.n, true));
        Json j = system_to_json(s);
        EXPECT_EQ(system_from_json(j), s);
        EXPECT_EQ(dump(system_to_json(system_from_json(Json::parse(dump(j))))), dump(j));
    }
}

TEST(SystemJson, ZeroDimensionsAreEmptyArrays) {
    SystemTriple s(ExactMatrix{{1}}, ExactMatrix(1, 0), ExactMatrix(0, 1));
    Json j = system_to_json(s);
    EXPECT_EQ(j["B"], Json::array());
    EXPECT_EQ(j["C"], Json::array());
    EXPECT_EQ(dump(j), "{\n  \"m\": 0,\n  \"n\": 1,\n  \"l\": 0,\n  \"A\": [\n    [\n      \"1\"\n    ]\n  ],\n"
                       "  \"B\": [],\n  \"C\": []\n}\n");
    Json rows_of_empty = j;
    rows_of_empty["B"] = Json::array({Json::array()});
    EXPECT_EQ(system_from_json(rows_of_empty), s);
}

TEST(SystemJson, Malformed) {
    auto parse = [](const char* text) { return system_from_json(Json::parse(text)); };
    EXPECT_EQ(kind_of([&] { parse(R"({"m":0,"n":1,"l":0,"A":[["x"]],"B":[],"C":[]})"); }), ErrorKind::MalformedInput);
    EXPECT_EQ(kind_of([&] { parse(R"({"m":0,"n":1,"l":0,"A":[[1]],"B":[],"C":[]})"); }), ErrorKind::MalformedInput);
    EXPECT_EQ(kind_of([&] { parse(R"({"m":0,"n":2,"l":0,"A":[["1"]],"B":[],"C":[]})"); }), ErrorKind::MalformedInput);
    EXPECT_EQ(kind_of([&] { parse(R"({"m":1,"n":1,"l":0,"A":[["1"]],"B":[],"C":[]})"); }), ErrorKind::MalformedInput);
    EXPECT_EQ(kind_of([&] { parse(R"({"n":1,"l":0,"A":[["1"]],"B":[],"C":[]})"); }), ErrorKind::MalformedInput);
    EXPECT_EQ(kind_of([&] { parse(R"({"m":0,"n":1,"l":0,"A":[["1/0"]],"B":[],"C":[]})"); }),
              ErrorKind::MalformedInput);
    EXPECT_EQ(kind_of([&] { parse("[]"); }), ErrorKind::MalformedInput);
}

TEST(Files, AtomicWriteAndRead) {
    const auto dir = std::filesystem::temp_directory_path() / "belitskii_io_test";
    std::filesystem::create_directories(dir);
    SystemTriple s(ExactMatrix{{0, 1}, {0, 0}}, ExactMatrix{{0}, {1}}, ExactMatrix{{1, 5}});
    write_file_atomically(dir / "s.json", dump(system_to_json(s)));
    EXPECT_FALSE(std::filesystem::exists(dir / "s.json.tmp"));
    EXPECT_EQ(read_system_file(dir / "s.json"), s);
    EXPECT_EQ(kind_of([&] { read_system_file(dir / "missing.json"); }), ErrorKind::MalformedInput);
    std::ofstream(dir / "bad.json") << "{not json";
    EXPECT_EQ(kind_of([&] { read_system_file(dir / "bad.json"); }), ErrorKind::MalformedInput);
    std::filesystem::remove_all(dir);
}

TEST(Batch, ParallelMatchesSerial) {
    std::vector<SystemTriple> inputs;
    for (size_t k = 0; k < 40; ++k) {
        Rng rng = make_rng(52, k);
        inputs.push_back(random_system(rng, random_dims(rng, 1, 6, 1)));
    }
    inputs.push_back(SystemTriple(ExactMatrix{{0, 1}, {2, 0}}, ExactMatrix(2, 0), ExactMatrix(0, 2)));
    auto serial = canonicalize_batch(inputs, Execution::Serial);
    auto parallel = canonicalize_batch(inputs, Execution::Parallel);
    ASSERT_EQ(serial.size(), parallel.size());
    for (size_t k = 0; k < inputs.size(); ++k) {
        ASSERT_EQ(serial[k].result.has_value(), parallel[k].result.has_value());
        if (serial[k].result) {
            EXPECT_EQ(serial[k].result->canonical, parallel[k].result->canonical);
            EXPECT_EQ(serial[k].result->witness, parallel[k].result->witness);
        }
        EXPECT_EQ(serial[k].error, parallel[k].error);
    }
    EXPECT_EQ(serial.back().error, ErrorKind::EigenvaluesNotInField);
}
