// End-to-end tests that drive the installed binary through a shell, so
// exit codes, stream routing and byte-level determinism are all covered.

#include <gtest/gtest.h>

#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "orbiclass/orbiclass.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args, bool merge_stderr = true) {
    std::string cmd = std::string(ORBICLASS_BIN) + " " + args +
                      (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    EXPECT_NE(pipe, nullptr);
    std::string out;
    char buf[4096];
    while (fgets(buf, sizeof buf, pipe) != nullptr) out += buf;
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

const char* kConedKlein = R"('{"two_q":8,"genus":2,"d":[1,1],"x":[4]}')";
const char* kTorusA = R"('{"two_q":8,"genus":2,"d":[1,7],"x":[]}')";
const char* kTorusB = R"('{"two_q":8,"genus":2,"d":[3,5],"x":[]}')";

}  // namespace

TEST(Cli, InvariantsJsonMatchesLibrary) {
    RunResult res = run(std::string("invariants --json --in ") + kConedKlein);
    EXPECT_EQ(res.exit_code, 0);
    orbiclass::json expected =
        orbiclass::invariant_tuple(orbiclass::make_datum(8, 2, {1, 1}, {4}));
    EXPECT_EQ(orbiclass::json::parse(res.output), expected);
}

TEST(Cli, InvariantsTextTable) {
    RunResult res = run(std::string("invariants --in ") + kConedKlein);
    EXPECT_EQ(res.exit_code, 0);
    EXPECT_EQ(res.output,
              "two_q          8\n"
              "genus          2\n"
              "isotropy       [4]\n"
              "h1             -\n"
              "l              2\n"
              "h2             {1,3} mod 4\n"
              "h2_applicable  true\n"
              "cover_genus    3\n");
}

TEST(Cli, InvariantsBatchArray) {
    RunResult res = run(
        R"(invariants --json --in '[{"two_q":8,"genus":2,"d":[1,7],"x":[]},{"two_q":8,"genus":1,"d":[3],"x":[2]}]')");
    EXPECT_EQ(res.exit_code, 0);
    orbiclass::json parsed = orbiclass::json::parse(res.output);
    ASSERT_TRUE(parsed.is_array());
    ASSERT_EQ(parsed.size(), 2u);
    EXPECT_EQ(parsed[0]["h1"], 0);
    EXPECT_EQ(parsed[1]["cover_genus"], 0);
}

TEST(Cli, EquivalentTextAndExitCode) {
    RunResult different = run(std::string("equivalent --a ") + kTorusA + " --b " + kTorusB);
    EXPECT_EQ(different.exit_code, 0);
    EXPECT_EQ(different.output, "inequivalent\n");

    RunResult same = run(std::string("equivalent --a ") + kTorusA +
                         R"( --b '{"two_q":8,"genus":2,"d":[7,1],"x":[]}')");
    EXPECT_EQ(same.exit_code, 0);
    EXPECT_EQ(same.output, "equivalent\n");
}

TEST(Cli, EquivalentMismatchedOrderFails) {
    RunResult res = run(std::string("equivalent --a ") + kTorusA +
                        R"( --b '{"two_q":12,"genus":2,"d":[1,11],"x":[]}')");
    EXPECT_EQ(res.exit_code, 1);
    EXPECT_NE(res.output.find("different orders"), std::string::npos);
}

TEST(Cli, CensusIsByteDeterministic) {
    const std::string args = "census --two-q 8 --genus 2 --r 0 --json";
    RunResult first = run(args);
    RunResult second = run(args);
    RunResult threaded = run(args + " --threads 4");
    EXPECT_EQ(first.exit_code, 0);
    EXPECT_EQ(first.output, second.output);
    EXPECT_EQ(first.output, threaded.output);
    orbiclass::json parsed = orbiclass::json::parse(first.output);
    EXPECT_EQ(parsed["classes"].size(), 3u);
    EXPECT_EQ(parsed["total_vectors"], 8);
}

TEST(Cli, CensusTextHeader) {
    RunResult res = run("census --two-q 8 --genus 2 --r 0");
    EXPECT_EQ(res.exit_code, 0);
    EXPECT_NE(res.output.find("census two_q 8  genus 2  r 0\n"), std::string::npos);
    EXPECT_NE(res.output.find("total vectors 8\nclasses 3\n"), std::string::npos);
    EXPECT_NE(res.output.find("{1,3,5,7} mod 8"), std::string::npos);
}

TEST(Cli, CensusRequiresExactlyOneConstraint) {
    EXPECT_EQ(run("census --two-q 8 --genus 2").exit_code, 1);
    EXPECT_EQ(run("census --two-q 8 --genus 2 --r 0 --max-cover-genus 1").exit_code, 1);
    EXPECT_EQ(run("census --two-q 8 --genus 2 --cone-orders 2").exit_code, 0);
}

TEST(Cli, ValidateReportsViolations) {
    RunResult bad = run(R"(validate --in '{"two_q":8,"genus":2,"d":[1,2],"x":[3,0]}')");
    EXPECT_EQ(bad.exit_code, 1);
    EXPECT_NE(bad.output.find("invalid"), std::string::npos);
    EXPECT_NE(bad.output.find("ParityD"), std::string::npos);
    EXPECT_NE(bad.output.find("ZeroIsotropy"), std::string::npos);

    RunResult good = run(std::string("validate --in ") + kConedKlein);
    EXPECT_EQ(good.exit_code, 0);
    EXPECT_EQ(good.output, "valid\nd [1 1]  x [4]\n");

    RunResult bad_json = run(R"(validate --json --in '{"two_q":8,"genus":2,"d":[1,1],"x":[]}')");
    EXPECT_EQ(bad_json.exit_code, 1);
    orbiclass::json parsed = orbiclass::json::parse(bad_json.output);
    EXPECT_EQ(parsed["valid"], false);
    EXPECT_EQ(parsed["errors"][0]["kind"], "LongRelation");
}

TEST(Cli, OrbitListingAndCap) {
    RunResult res = run(R"(orbit --in '{"two_q":8,"genus":2,"d":[1,3],"x":[]}')");
    EXPECT_EQ(res.exit_code, 0);
    EXPECT_NE(res.output.find("orbit size 4"), std::string::npos);

    RunResult capped = run(R"(orbit --in '{"two_q":8,"genus":2,"d":[1,3],"x":[]}' --bfs-cap 2)");
    EXPECT_EQ(capped.exit_code, 2);
    EXPECT_NE(capped.output.find("cap"), std::string::npos);
}

TEST(Cli, WitnessJsonReplays) {
    RunResult res = run(std::string("witness --json --a ") + kConedKlein +
                        R"( --b '{"two_q":8,"genus":2,"d":[3,7],"x":[4]}')");
    EXPECT_EQ(res.exit_code, 0);
    orbiclass::json parsed = orbiclass::json::parse(res.output);
    ASSERT_FALSE(parsed["witness"].is_null());
    std::vector<orbiclass::Move> seq;
    for (const auto& mj : parsed["witness"]) seq.push_back(mj.get<orbiclass::Move>());
    EXPECT_EQ(orbiclass::apply_moves(orbiclass::make_datum(8, 2, {1, 1}, {4}), seq),
              orbiclass::make_datum(8, 2, {3, 7}, {4}));

    RunResult none = run(std::string("witness --json --a ") + kTorusA +
                         R"( --b '{"two_q":8,"genus":2,"d":[1,3],"x":[]}')");
    EXPECT_EQ(none.exit_code, 0);
    EXPECT_TRUE(orbiclass::json::parse(none.output)["witness"].is_null());
}

TEST(Cli, VerifyCleanRunAndJson) {
    RunResult res = run("verify --two-q 8 --genus 2 --r 1 --json");
    EXPECT_EQ(res.exit_code, 0);
    orbiclass::json parsed = orbiclass::json::parse(res.output);
    EXPECT_EQ(parsed["total_vectors"], 20);
    EXPECT_TRUE(parsed["soundness_violations"].empty());
    EXPECT_TRUE(parsed["completeness_violations"].empty());
}

TEST(Cli, EmbeddableText) {
    RunResult res = run(std::string("embeddable --in ") + kTorusA);
    EXPECT_EQ(res.exit_code, 0);
    EXPECT_EQ(res.output, "embeddable (condition 1)\n");

    RunResult gated = run(std::string("embeddable --in ") + kConedKlein);
    EXPECT_EQ(gated.exit_code, 0);
    EXPECT_NE(gated.output.find("not embeddable"), std::string::npos);
    EXPECT_NE(gated.output.find("note:"), std::string::npos);
}

TEST(Cli, OrientablePairText) {
    RunResult res =
        run(R"(orientable-pair --in '{"two_q":8,"genus_orientable":1,"x":[2],"c":[3]}')");
    EXPECT_EQ(res.exit_code, 0);
    EXPECT_EQ(res.output, "pair {2,3} / {5,6}\n");
}

TEST(Cli, CoverGenusJson) {
    RunResult res = run(R"(cover-genus --json --in '{"two_q":8,"genus":1,"d":[3],"x":[2]}')");
    EXPECT_EQ(res.exit_code, 0);
    orbiclass::json parsed = orbiclass::json::parse(res.output);
    EXPECT_EQ(parsed["chi"], 2);
    EXPECT_EQ(parsed["genus_cover"], 0);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run("").exit_code, 1);                       // missing subcommand
    EXPECT_EQ(run("census --two-q 8").exit_code, 1);       // missing required flag
    EXPECT_EQ(run("invariants --in nope.json").exit_code, 1);
    EXPECT_EQ(run("census --two-q 8 --genus 2 --r 0 --bogus").exit_code, 1);
    EXPECT_EQ(run("--help").exit_code, 0);
    EXPECT_EQ(run("census --help").exit_code, 0);
}

TEST(Cli, InvalidInputDatumFailsCleanly) {
    RunResult res = run(R"(invariants --in '{"two_q":8,"genus":2,"d":[1,1],"x":[]}')");
    EXPECT_EQ(res.exit_code, 1);
    EXPECT_NE(res.output.find("LongRelation"), std::string::npos);

    RunResult broken = run("invariants --in '{broken'");
    EXPECT_EQ(broken.exit_code, 1);
}
