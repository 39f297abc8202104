#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

std::string chain_path(const std::string& name) { return std::string(HUNGERLAB_CHAINS_DIR) + "/" + name; }

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "hungerlab");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = hungerlab::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class Cli : public testing::Test {
protected:
    void SetUp() override {
        dir_ = std::filesystem::temp_directory_path() /
               ("hungerlab_cli_" + std::string(testing::UnitTest::GetInstance()->current_test_info()->name()));
        std::filesystem::create_directories(dir_);
    }
    void TearDown() override { std::filesystem::remove_all(dir_); }

    std::filesystem::path dir_;
};

}  // namespace

TEST_F(Cli, SimulateEndsWithExpectedFiringVector) {
    const auto r = invoke({"simulate", "--chain", chain_path("doubly.json"), "--steps", "7"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 9u);
    EXPECT_EQ(ls[0], "step,fired,h_1,h_2,h_3");
    EXPECT_EQ(ls[1], "0,,0,0,0");
    EXPECT_EQ(ls[8], "7,v1,-1/2,1/2,0");
    EXPECT_NE(r.err.find("firing vector: 3,2,2"), std::string::npos);
}

TEST_F(Cli, ChipAddFinalLine) {
    const auto r = invoke({"chip-add", "--chain", chain_path("ex1.json"), "--at", "v3"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto ls = lines(r.out);
    EXPECT_EQ(ls.back(), "3,v5,1/5,1/5,2/5,-3/5,-1/5");
    EXPECT_NE(r.err.find("final hunger: 1/5,1/5,2/5,-3/5,-1/5"), std::string::npos);
    const auto by_index = invoke({"chip-add", "--chain", chain_path("ex1.json"), "--at", "3"});
    EXPECT_EQ(by_index.out, r.out);
}

TEST_F(Cli, BasinWritesFourClasses) {
    const auto out = dir_ / "basin.csv";
    const auto r = invoke({"basin", "--chain", chain_path("ex71.json"), "--bounds", "-1.5", "1.5", "--step", "1/20", "--output",
                           out.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = lines(read_file(out));
    EXPECT_EQ(rows[0], "h1,h2,recurrent,period,order_class,entry_steps");
    EXPECT_EQ(rows.size(), 1u + 61u * 61u);
    const auto classes = lines(read_file(out.string() + ".classes"));
    ASSERT_EQ(classes.size(), 5u);
    EXPECT_EQ(classes[0], "order_class,canonical_order");
}

TEST_F(Cli, ProfileSubcommandsShareSchema) {
    const std::string header = "N,estimate,exact,deviation,N_times_deviation";
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"stationary", "--chain", chain_path("doubly.json"), "--steps", "50"},
             {"hitting", "--chain", chain_path("rerouted61.json"), "--from", "v2", "--to", "v1", "--steps", "50"},
             {"absorb", "--chain", chain_path("rerouted61.json"), "--from", "v2", "--steps", "50"},
             {"escape", "--chain", chain_path("doubly.json"), "--from", "v1", "--to", "v3", "--steps", "50"},
             {"return-time", "--chain", chain_path("ex71.json"), "--from", "v3", "--steps", "50"},
         }) {
        const auto r = invoke(args);
        ASSERT_EQ(r.code, 0) << args[0] << ": " << r.err;
        const auto ls = lines(r.out);
        EXPECT_EQ(ls.at(0), header) << args[0];
        EXPECT_EQ(ls.size(), 51u) << args[0];
    }
}

TEST_F(Cli, OtherSchemas) {
    EXPECT_EQ(lines(invoke({"compare2", "--steps", "5"}).out).at(0), "N,hunger_dev,rotor_dev");
    EXPECT_EQ(lines(invoke({"engel", "--chain", chain_path("doubly.json"), "--c0", "1,2,1"}).out).at(0), "step,fired");
    EXPECT_EQ(lines(invoke({"rotor", "--chain", chain_path("doubly.json"), "--steps", "3"}).out).at(0), "step,state");
    EXPECT_EQ(lines(invoke({"cover", "--chain", chain_path("ex71.json"), "--h0=1/2,-1/3,-1/6"}).out).at(0), "state,h,x,u");
    EXPECT_EQ(lines(invoke({"cycle", "--chain", chain_path("ex71.json")}).out).at(0), "step,fired,h_1,h_2,h_3");
    EXPECT_EQ(lines(invoke({"conjectures", "--chain", chain_path("ex71.json"), "--samples", "3"}).out).at(0),
              "sample,h,recurrent,period,lcd,counterexample");
    EXPECT_EQ(lines(invoke({"simulate", "--lazy", "goldbug", "--steps", "3"}).out).at(0),
              "step,fired_label,touched_state:hunger;...");
    EXPECT_EQ(invoke({"validate", "--chain", chain_path("ex1.json")}).code, 0);
}

TEST_F(Cli, ExitCodes) {
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"bogus"}).code, 2);
    EXPECT_EQ(invoke({"simulate", "--chain", chain_path("missing.json")}).code, 2);
    EXPECT_EQ(invoke({"chip-add", "--chain", chain_path("ex1.json"), "--at", "v1"}).code, 2);
    EXPECT_EQ(invoke({"chip-add", "--chain", chain_path("ex1.json"), "--at", "v9"}).code, 2);
    EXPECT_EQ(invoke({"cycle", "--chain", chain_path("ex71.json"), "--cap", "3"}).code, 3);
    EXPECT_EQ(invoke({"cycle", "--chain", chain_path("two_state_float.json")}).code, 4);
    EXPECT_EQ(invoke({"cycle", "--chain", chain_path("ex71.json"), "--mode", "float"}).code, 4);
    EXPECT_EQ(invoke({"simulate", "--chain", chain_path("two_state_float.json"), "--mode", "rational"}).code, 2);
    EXPECT_EQ(invoke({"engel", "--chain", chain_path("doubly.json"), "--c0", "0,0,0"}).code, 2);
    EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST_F(Cli, FloatChainsSimulate) {
    const auto r = invoke({"stationary", "--chain", chain_path("two_state_float.json"), "--steps", "10"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(lines(r.out).size(), 11u);
}

TEST_F(Cli, IdenticalInvocationsAreByteIdentical) {
    const std::vector<std::string> args{"conjectures", "--chain", chain_path("ex71.json"), "--samples", "10", "--bounds", "-1", "1",
                                        "--step", "1/4"};
    const auto a = invoke(args), b = invoke(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.err, b.err);
}
