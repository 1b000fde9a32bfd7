#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>
#include <sys/wait.h>

#include "augvar/cli.hpp"

using namespace augvar;
using nlohmann::json;

namespace {

std::filesystem::path scratch()
{
    const auto dir = std::filesystem::temp_directory_path() / "augvar_cli_test";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string write_file(const std::string& name, const std::string& text)
{
    const auto path = scratch() / name;
    std::ofstream(path) << text;
    return path.string();
}

RunConfig config(const std::string& sub)
{
    RunConfig c;
    c.subcommand = sub;
    return c;
}

json run_json(RunConfig c)
{
    c.format = OutputFormat::Json;
    return json::parse(run(c).report);
}

int run_binary(const std::string& args)
{
    const char* cli = std::getenv("AUGVAR_CLI");
    if (cli == nullptr)
        return -1;
    const std::string cmd = std::string(cli) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::vector<RunConfig> one_of_each()
{
    const std::string poly = write_file("poly.json", R"({"vars":["y1","y2"],
        "terms":[{"exp":[0,0],"coef":"1"},{"exp":[1,0],"coef":"1"},
                 {"exp":[0,1],"coef":"-1"}]})");
    const std::string fan = write_file("fan.json", R"({"rays":[[1,0],[0,1],[-1,-1]],"signs":[1,1,1]})");
    const std::string cand = write_file("cand.json", R"({"ell":2,"y":{"1":["-2","1"],"2":["0","-1"]},
        "a":{"12":"0","21":"0"},"signs":[1,1,1]})");
    std::vector<RunConfig> out;
    auto c = config("potential");
    c.clifford = 3;
    c.signs = "+,+,-";
    out.push_back(c);
    c = config("augpoly");
    c.fan_path = fan;
    out.push_back(c);
    c = config("newton");
    c.inputs = {poly};
    out.push_back(c);
    c = config("irreducible");
    c.product = "unit";
    out.push_back(c);
    c = config("distinguish");
    c.inputs = {poly, fan};
    out.push_back(c);
    c = config("solve-aug");
    c.inputs = {poly};
    c.order = 6;
    out.push_back(c);
    c = config("solve-aug");
    c.product = "anticanonical";
    c.generic = true;
    c.seed = 7;
    c.order = 4;
    out.push_back(c);
    c = config("solve-nilpotent");
    c.inputs = {poly};
    c.multiplicity = 3;
    c.order = 4;
    out.push_back(c);
    c = config("partitions");
    c.ell = 3;
    out.push_back(c);
    c = config("check-candidate");
    c.inputs = {cand};
    out.push_back(c);
    c = config("markov");
    c.bound = 200;
    out.push_back(c);
    c = config("localize");
    c.d_max = 5;
    c.order = 5;
    out.push_back(c);
    return out;
}

}  // namespace

TEST(CliTest, EverySubcommandIsDeterministic)
{
    std::set<std::string> covered;
    for (auto c : one_of_each()) {
        for (auto fmt : {OutputFormat::Text, OutputFormat::Json}) {
            c.format = fmt;
            const auto a = run(c), b = run(c);
            EXPECT_EQ(a.exit_code, 0) << c.subcommand << "\n" << a.report;
            EXPECT_EQ(a.report, b.report) << c.subcommand;
        }
        covered.insert(c.subcommand);
    }
    EXPECT_EQ(covered, std::set<std::string>(subcommands().begin(), subcommands().end()));
}

TEST(CliTest, ReportsEmbedTheConfig)
{
    auto c = config("localize");
    c.seed = 42;
    c.order = 5;
    const json j = run_json(c);
    EXPECT_EQ(j["config"]["seed"], 42);
    EXPECT_EQ(j["config"]["order"], 5);
    EXPECT_EQ(j["exit_code"], 0);
    const std::string text = run(c).report;
    EXPECT_EQ(text.rfind("# augvar localize ", 0), 0u);
    EXPECT_NE(text.find("\"seed\":42"), std::string::npos);
}

TEST(CliTest, SolveAugReportsKappaAndLogCoefficients)
{
    auto c = config("solve-aug");
    c.clifford = 3;
    c.signs = "+,+,-";
    c.order = 5;
    const auto r = run(c);
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.report.find("kappa: 1\n"), std::string::npos) << r.report;
    EXPECT_NE(r.report.find("coefficients: [1, -1/2, 1/3, -1/4, 1/5]"), std::string::npos) << r.report;
}

TEST(CliTest, PartitionsAndLocalizeExamples)
{
    auto p = config("partitions");
    p.ell = 3;
    const json j = run_json(p);
    EXPECT_EQ(j["result"]["components"].size(), 4u);

    auto l = config("localize");
    l.d_max = 5;
    l.order = 6;
    const auto r = run(l);
    for (const char* line : {"d=1 contribution 1\n", "d=2 contribution -1/4\n", "d=3 contribution 1/9\n",
                             "d=4 contribution -1/16\n", "d=5 contribution 1/25\n", "identity verdict: PASS\n"})
        EXPECT_NE(r.report.find(line), std::string::npos) << line;
}

TEST(CliTest, ExitCodes)
{
    const std::string bad = write_file("bad_cand.json", R"({"ell":2,"y":{"1":["1","1"],"2":["0","-1"]},
        "a":{"12":"0","21":"0"},"signs":[1,1,1]})");
    auto c = config("check-candidate");
    c.inputs = {bad};
    EXPECT_EQ(run(c).exit_code, 2);
    c.inputs = {write_file("broken.json", "{\"ell\": 2,")};
    EXPECT_EQ(run(c).exit_code, 1);
    EXPECT_EQ(run(config("no-such-command")).exit_code, 1);
    auto z = config("markov");
    z.bound = 0;
    EXPECT_EQ(run(z).exit_code, 1);
}

TEST(CliTest, ParseErrorsNameThePath)
{
    const std::string path = write_file("bad_poly.json", R"({"vars":["y1"],
        "terms":[{"exp":[0],"coef":"1"},{"exp":[1],"coef":"x/y"}]})");
    auto c = config("newton");
    c.inputs = {path};
    const json j = run_json(c);
    EXPECT_EQ(j["exit_code"], 1);
    EXPECT_EQ(j["error"]["kind"], "ParseError");
    const std::string message = j["error"]["message"];
    EXPECT_NE(message.find("$.terms[1]"), std::string::npos) << message;
    EXPECT_NE(message.find("bad_poly.json"), std::string::npos) << message;
}

TEST(CliTest, BinaryExitCodes)
{
    if (std::getenv("AUGVAR_CLI") == nullptr)
        GTEST_SKIP() << "AUGVAR_CLI not set";
    const std::string bad = write_file("bad_cand2.json", R"({"ell":2,"y":{"1":["1","1"],"2":["0","-1"]},
        "a":{"12":"0","21":"0"},"signs":[1,1,1]})");
    EXPECT_EQ(run_binary("localize --d-max 3 --order 3"), 0);
    EXPECT_EQ(run_binary("check-candidate " + bad), 2);
    EXPECT_EQ(run_binary("markov --bound 0"), 1);
    EXPECT_EQ(run_binary("solve-aug --clifford 3 --signs +,+"), 1);
}
