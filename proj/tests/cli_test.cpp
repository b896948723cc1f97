#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "bkcoord/io.hpp"
#include "cli.hpp"
#include "testing.hpp"

namespace bkcoord {
namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "bkcoord");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = std::filesystem::temp_directory_path() /
               ("bkcoord_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        std::filesystem::create_directories(dir_);
    }
    void TearDown() override { std::filesystem::remove_all(dir_); }

    std::string tmp(const std::string& name) const { return (dir_ / name).string(); }
    static std::string data(const std::string& name) { return testing::data_path(name + ".json"); }

private:
    std::filesystem::path dir_;
};

TEST_F(Cli, AssignWritesBalancedDocument) {
    const auto r = run({"assign", "-i", data("three_classes")});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["metadata"]["balanced"], true);
    EXPECT_EQ(j["metadata"]["conforming"], true);
    EXPECT_EQ(j["metadata"]["strategy"], "contour");
    EXPECT_EQ(j["metadata"]["orientations"].size(), 4u);
    EXPECT_EQ(j["coordinates"].size(), 15u);
}

TEST_F(Cli, MinimalGraphIsOneBlock) {
    const auto r = run({"assign", "-i", data("minimal")});
    ASSERT_EQ(r.code, cli::kOk);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["coordinates"], nlohmann::json({{"a", 0.0}, {"c", 0.0}}));
    EXPECT_TRUE(r.err.empty());
}

TEST_F(Cli, LegacyStaircaseCheckListsOffendingPair) {
    const std::string bad = tmp("bad.json");
    ASSERT_EQ(run({"assign", "-i", data("staircase"), "--strategy", "legacy-buggy", "--no-balance", "-o", bad}).code,
              0);
    const auto r = run({"check", "-i", data("staircase"), "--coords", bad});
    EXPECT_EQ(r.code, cli::kInvariantViolation);
    const auto v = nlohmann::json::parse(r.out)["violations"];
    ASSERT_FALSE(v.empty());
    EXPECT_EQ(v[0]["kind"], "order");
    EXPECT_EQ(v[0]["ids"], nlohmann::json::array({"c2", "h"}));
}

TEST_F(Cli, AssignSingleOrientationAndDeltaOverride) {
    const auto r = run({"assign", "-i", data("double_shift"), "--orientations", "ur", "--delta", "2"});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["metadata"]["balanced"], false);
    EXPECT_EQ(j["metadata"]["orientations"], nlohmann::json::array({"ur"}));
    EXPECT_EQ(j["metadata"]["delta"], 2.0);
}

TEST_F(Cli, NoBalanceKeepsFirstOrientation) {
    const auto r = run({"assign", "-i", data("staircase"), "--no-balance"});
    ASSERT_EQ(r.code, cli::kOk);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["metadata"]["orientations"], nlohmann::json::array({"ul"}));
    EXPECT_EQ(j["coordinates"]["c1"], -2.0);
}

TEST_F(Cli, LegacyIsFlaggedNonConforming) {
    const auto r = run({"assign", "-i", data("staircase"), "--strategy", "legacy-buggy"});
    ASSERT_EQ(r.code, cli::kOk);
    EXPECT_EQ(nlohmann::json::parse(r.out)["metadata"]["conforming"], false);
}

TEST_F(Cli, CheckPassesCorrectedAndFailsLegacy) {
    const std::string good = tmp("good.json");
    const std::string bad = tmp("bad.json");
    ASSERT_EQ(run({"assign", "-i", data("double_shift"), "--no-balance", "-o", good}).code, 0);
    ASSERT_EQ(run({"assign", "-i", data("double_shift"), "--no-balance", "--strategy", "legacy-buggy", "-o", bad})
                  .code,
              0);
    const auto ok = run({"check", "-i", data("double_shift"), "--coords", good});
    EXPECT_EQ(ok.code, cli::kOk);
    EXPECT_EQ(nlohmann::json::parse(ok.out)["ok"], true);
    const auto fail = run({"check", "-i", data("double_shift"), "--coords", bad});
    EXPECT_EQ(fail.code, cli::kInvariantViolation);
    const auto j = nlohmann::json::parse(fail.out);
    EXPECT_EQ(j["ok"], false);
    EXPECT_EQ(j["violations"][0]["kind"], "block");
}

TEST_F(Cli, CheckRejectsMismatchedDocument) {
    const std::string doc = tmp("doc.json");
    write_file(doc, R"({"coordinates": {"a": 0}})");
    EXPECT_EQ(run({"check", "-i", data("double_shift"), "--coords", doc}).code, cli::kInputError);
}

TEST_F(Cli, DiffFromFileAndSeed) {
    const auto r = run({"diff", "-i", data("double_shift")});
    ASSERT_EQ(r.code, cli::kOk);
    EXPECT_EQ(nlohmann::json::parse(r.out)["classification"], "double_shift");
    const auto seeded = run({"diff", "--seed", "3", "--max-vertices", "50"});
    EXPECT_EQ(seeded.code, cli::kOk);
    EXPECT_EQ(run({"diff", "--seed", "3", "--max-vertices", "50"}).out, seeded.out);
    EXPECT_EQ(run({"diff"}).code, cli::kInputError);
    const auto lr = run({"diff", "-i", data("staircase"), "--orientations", "lr"});
    EXPECT_EQ(nlohmann::json::parse(lr.out)["orientation"], "lr");
}

TEST_F(Cli, SvgWithAndWithoutCoordinates) {
    const auto r = run({"svg", "-i", data("three_classes"), "--overlays"});
    ASSERT_EQ(r.code, cli::kOk);
    EXPECT_NE(r.out.find("<svg"), std::string::npos);
    const std::string coords = tmp("c.json");
    ASSERT_EQ(run({"assign", "-i", data("three_classes"), "--orientations", "ll", "-o", coords}).code, 0);
    const std::string out = tmp("out.svg");
    EXPECT_EQ(run({"svg", "-i", data("three_classes"), "--coords", coords, "-o", out}).code, cli::kOk);
    EXPECT_NE(read_file(out).find("</svg>"), std::string::npos);
}

TEST_F(Cli, ValidateReportsViolations) {
    EXPECT_EQ(run({"validate", "-i", data("minimal")}).code, cli::kOk);
    const auto bad = run({"validate", "-i", data("invalid_span")});
    EXPECT_EQ(bad.code, cli::kValidationFailure);
    EXPECT_EQ(nlohmann::json::parse(bad.out)["violations"][0]["code"], "non_neighboring_edge");
    EXPECT_EQ(run({"assign", "-i", data("invalid_span")}).code, cli::kValidationFailure);
}

TEST_F(Cli, NormalizeProducesProperGraph) {
    const auto r = run({"normalize", "-i", data("long_edge")});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    const auto d = parse_graph_json(r.out);
    EXPECT_TRUE(validate(d).ok());
    EXPECT_EQ(d.dummies.size(), 2u);
}

TEST_F(Cli, GenerateIsDeterministic) {
    const auto a = run({"generate", "--seed", "11", "--max-vertices", "40"});
    ASSERT_EQ(a.code, cli::kOk);
    EXPECT_EQ(run({"generate", "--seed", "11", "--max-vertices", "40"}).out, a.out);
    EXPECT_TRUE(validate(parse_graph_json(a.out)).ok());
}

TEST_F(Cli, InputErrors) {
    EXPECT_EQ(run({"assign", "-i", data("malformed")}).code, cli::kInputError);
    EXPECT_EQ(run({"assign", "-i", tmp("missing.json")}).code, cli::kInputError);
    EXPECT_EQ(run({"assign", "-i", data("minimal"), "--strategy", "fast"}).code, cli::kInputError);
    EXPECT_EQ(run({"assign"}).code, cli::kInputError);
    EXPECT_EQ(run({}).code, cli::kInputError);
    EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

}  // namespace
}  // namespace bkcoord
