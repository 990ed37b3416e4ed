#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "corpus.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "lucas");
  std::ostringstream out, err;
  const int code = lucas::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempFile {
 public:
  explicit TempFile(const std::string& content) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("lucas_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::ofstream(path_) << content;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST(CliSeq, Examples) {
  EXPECT_EQ(run({"seq", "-p", "2", "-q", "4", "--u", "0", "8"}).out, "0 1 2 0 -8 -16 0 64 128\n");
  EXPECT_EQ(run({"seq", "-p", "1", "-q", "-1", "--u", "0", "5"}).out, "0 1 1 2 3 5\n");
  EXPECT_EQ(run({"seq", "-p", "1", "-q", "-1", "--companion", "0", "4"}).out, "2 1 3 4 7\n");
  EXPECT_EQ(run({"seq", "-p", "1/2", "-q", "3", "--x0", "1", "--x1", "-1", "0", "2"}).out, "1 -1 -7/2\n");
  const Outcome back = run({"seq", "-p", "1", "-q", "0", "--u", "-1", "3"});
  EXPECT_EQ(back.code, lucas::cli::kError);
  EXPECT_FALSE(back.err.empty());
}

TEST(CliBinom, Examples) {
  EXPECT_EQ(run({"binom", "-p", "1", "-q", "1", "7", "3"}).out, "2\n");
  EXPECT_EQ(run({"binom", "-p", "1", "-q", "-1", "5"}).out, "1 5 15 15 5 1\n");
  const Outcome quotient = run({"binom", "-p", "1", "-q", "1", "7", "3", "--route", "quotient"});
  EXPECT_EQ(quotient.code, lucas::cli::kError);
  EXPECT_NE(quotient.err.find("u_3 = 0"), std::string::npos);
  const Outcome all = run({"binom", "-p", "1", "-q", "1", "7", "--route", "all"});
  EXPECT_EQ(all.code, lucas::cli::kOk);
  EXPECT_NE(all.out.find("pascal: 1 1 0 2 2 0 1 1"), std::string::npos);
  EXPECT_NE(all.out.find("consistent: true"), std::string::npos);
  EXPECT_EQ(run({"binom", "-p", "1", "-q", "1", "7", "3", "--route", "bogus"}).code, lucas::cli::kError);
}

TEST(CliJarden, Examples) {
  EXPECT_EQ(run({"jarden", "-p", "1", "-q", "-1", "3"}).out, "1 -3 -6 3 1\n");
  EXPECT_EQ(run({"jarden", "-p", "1", "-q", "1", "6"}).out, "1 -1 0 -2 2 0 1 -1\n");
  EXPECT_EQ(run({"jarden", "-p", "2", "-q", "4", "3", "--degenerate", "3"}).out, "1 0 0 512\n");
  EXPECT_EQ(run({"jarden", "-p", "2", "-q", "4", "1", "--degenerate", "2"}).code, lucas::cli::kError);
}

TEST(CliMatrix, Examples) {
  const Outcome two = run({"matrix", "2", "-p", "3", "-q", "5", "--check", "all"});
  EXPECT_EQ(two.code, lucas::cli::kOk);
  EXPECT_NE(two.out.find("similarity: true"), std::string::npos);
  EXPECT_NE(two.out.find("charpoly: x^2 - 3*x + 5"), std::string::npos);
  EXPECT_NE(two.out.find("binomial form match: true"), std::string::npos);

  const Outcome four = run({"matrix", "4", "-p", "1", "-q", "1", "--check", "charpoly"});
  EXPECT_NE(four.out.find("binomial form: 1 1 0 1 1"), std::string::npos) << four.out;
  EXPECT_NE(four.out.find("binomial form match: true"), std::string::npos);

  const Outcome one = run({"matrix", "1", "-p", "0", "-q", "0", "--check", "all"});
  EXPECT_EQ(one.code, lucas::cli::kOk);
  EXPECT_EQ(one.out.find("false"), std::string::npos);

  EXPECT_EQ(run({"matrix", "2", "-p", "x", "-q", "0"}).code, lucas::cli::kError);
}

TEST(CliProve, ExitCodes) {
  const TempFile env(lucas::testing::kFibEnv);
  const Outcome ok = run({"prove", "--env", env.path(), "--identity", lucas::testing::kDetIdentity});
  EXPECT_EQ(ok.code, lucas::cli::kOk);
  EXPECT_NE(ok.out.find("(order 4)"), std::string::npos);

  const Outcome no = run({"prove", "--env", env.path(), "--identity", "F[n+2]=F[n+1]"});
  EXPECT_EQ(no.code, lucas::cli::kDisproved);
  EXPECT_NE(no.out.find("n=1"), std::string::npos);

  const Outcome bad = run({"prove", "--env", env.path(), "--identity", "F[n+2]=F[n+1"});
  EXPECT_EQ(bad.code, lucas::cli::kError);
  EXPECT_NE(bad.err.find("position 12"), std::string::npos);

  EXPECT_EQ(run({"prove", "--env", "/nonexistent/env", "--identity", "1 = 1"}).code, lucas::cli::kError);
}

TEST(CliProve, IdentityFile) {
  const TempFile env(lucas::testing::kFibEnv);
  const TempFile ids("# doubling\nF[2n+1] = F[n+1]^2 + F[n]^2\n\nF[2n] = F[n]*L[n]\n");
  const Outcome r = run({"prove", "--env", env.path(), "--file", ids.path(), "--json"});
  EXPECT_EQ(r.code, lucas::cli::kOk);
  const auto doc = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(doc["payload"]["results"].size(), 2u);
}

TEST(CliProve, JsonCertificateReplays) {
  const TempFile env(lucas::testing::kFibEnv);
  const Outcome r = run({"--json", "prove", "--env", env.path(), "--identity", "F[2n+1] = F[n+1]^2 + F[n]^2"});
  ASSERT_EQ(r.code, lucas::cli::kOk);
  const auto doc = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(doc.dump(2) + "\n", r.out);
  EXPECT_EQ(doc["status"], "ok");
  EXPECT_EQ(doc["payload"]["order"], 3);

  const TempFile cert(r.out);
  const Outcome replay = run({"prove", "--env", env.path(), "--check", cert.path()});
  EXPECT_EQ(replay.code, lucas::cli::kOk);
  EXPECT_NE(replay.out.find("certificate valid"), std::string::npos);

  auto tampered = doc;
  tampered["payload"]["checked"][1]["left"] = "3";
  tampered["payload"]["checked"][1]["right"] = "3";
  const TempFile forged(tampered.dump(2));
  EXPECT_EQ(run({"prove", "--env", env.path(), "--check", forged.path()}).code, lucas::cli::kDisproved);
}

TEST(CliJson, EveryCommandRoundTrips) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"seq", "-p", "2", "-q", "4", "--u", "0", "8", "--json"},
           {"binom", "-p", "3/2", "-q", "-1", "6", "--json"},
           {"binom", "-p", "1", "-q", "1", "7", "--route", "all", "--json"},
           {"jarden", "-p", "1", "-q", "1", "6", "--json"},
           {"matrix", "3", "-p", "1/3", "-q", "2", "--json"},
           {"selftest", "--json"},
           {"seq", "-p", "1", "-q", "0", "--u", "-1", "3", "--json"}}) {
    const Outcome r = run(args);
    const auto doc = nlohmann::ordered_json::parse(r.out);
    EXPECT_EQ(doc.dump(2) + "\n", r.out) << args[0];
    EXPECT_TRUE(doc.contains("command") && doc.contains("status") && doc.contains("payload") &&
                doc.contains("diagnostics"));
  }
}

TEST(CliSelftest, PassesAndHonoursDisabledRoute) {
  const Outcome all = run({"selftest"});
  EXPECT_EQ(all.code, lucas::cli::kOk);
  EXPECT_EQ(all.out.find("[fail]"), std::string::npos);
  const Outcome reduced = run({"selftest", "--disable-route", "quotient"});
  EXPECT_EQ(reduced.code, lucas::cli::kOk);
  EXPECT_NE(reduced.out.find("[skipped] route agreement"), std::string::npos);
}

TEST(CliUsage, Errors) {
  EXPECT_EQ(run({}).code, lucas::cli::kError);
  EXPECT_EQ(run({"frobnicate"}).code, lucas::cli::kError);
  EXPECT_EQ(run({"--help"}).code, lucas::cli::kOk);
}
