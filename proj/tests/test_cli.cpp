#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "symbool/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int const code = symbool::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(std::string const& name) {
  return std::string(SYMBOOL_TEST_DATA) + "/" + name;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("perm conjugate-bases") {
  auto const yes = cli({"perm", "conjugate-bases", "-n", "3", "--b1",
                        "(0,1,2);(0,1)", "--b2", "(0,1,2);(1,2)"});
  CHECK(yes.code == 0);
  CHECK(yes.out == "(0,1,2)\n");
  auto const no = cli({"perm", "conjugate-bases", "-n", "3", "--b1",
                       "(0,1,2);(0,1)", "--b2", "(0,1);(0,1,2)"});
  CHECK(no.code == 0);
  CHECK(no.out == "none\n");
  auto const bad = cli({"perm", "conjugate-bases", "-n", "3", "--b1",
                        "(0,1,2);(0,2,1)", "--b2", "(0,1);(0,1,2)"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("error:") == 0);
}

TEST_CASE("complexity") {
  auto const r = cli({"complexity", "--left", data("ex33_left.aut"), "--right",
                      data("ex33_right.aut"), "--op", "and"});
  CHECK(r.code == 0);
  CHECK(r.out == "6\n");
  CHECK(cli({"complexity", "--left", data("ex33_left.aut"), "--right",
             data("ex33_right.aut"), "--table", "0110"})
            .out
        == "4\n");
  CHECK(cli({"complexity", "--left", data("ex33_left.aut"), "--right",
             data("ex33_right.aut"), "--op", "or"})
            .out
        == "12\n");
  // Neither --op nor --table, or both
  CHECK(cli({"complexity", "--left", data("ex33_left.aut"), "--right",
             data("ex33_right.aut")})
            .code
        == 2);
  CHECK(cli({"complexity", "--left", data("ex33_left.aut"), "--right",
             data("ex33_right.aut"), "--op", "and", "--table", "0001"})
            .code
        == 2);
  CHECK(cli({"complexity", "--left", data("no_finals.aut"), "--right",
             data("ex33_right.aut"), "--op", "and"})
            .code
        == 2);
  auto const parse = cli({"complexity", "--left", data("bad_key.aut"),
                          "--right", data("ex33_right.aut"), "--op", "and"});
  CHECK(parse.code == 2);
  CHECK(parse.err.find("line 5") != std::string::npos);
}

TEST_CASE("pairgraph") {
  auto const r = cli({"pairgraph", "--left", data("ex32_left.aut"), "--right",
                      data("ex32_right.aut"), "--op", "xor"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("product 2x3 states 6 connected yes\ncomponents 4\n", 0) == 0);
  CHECK(r.out.find("predicted-minimal yes") != std::string::npos);
  auto const bare = cli({"pairgraph", "--left", data("ex32_left.aut"),
                         "--right", data("ex32_right.aut")});
  CHECK(bare.code == 0);
  CHECK(bare.out.find("predicted-minimal") == std::string::npos);
}

TEST_CASE("verify") {
  auto const path = std::filesystem::temp_directory_path() / "symbool_cli_test.tsv";
  auto const r = cli({"verify", "--m", "2", "--n", "3", "--exhaustive", "--ops",
                      "and,xor", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("instances 1296\n") != std::string::npos);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "m\tn\tb1\tb2\tconjugate\tconnected\tF\tFp\top\tpredicted\toracle\tstatus");
  std::size_t lines = 0;
  for (std::string line; std::getline(in, line);) {
    ++lines;
  }
  CHECK(lines == 1296);
  std::filesystem::remove(path);

  auto const s = cli({"verify", "--m", "3", "--n", "4", "--samples", "20",
                      "--seed", "3", "--jobs", "2"});
  CHECK(s.code == 0);
  CHECK(s.out.find("mode=sampled samples=20 seed=3") != std::string::npos);

  CHECK(cli({"verify", "--m", "3", "--n", "3"}).code == 2);
  CHECK(cli({"verify", "--m", "3", "--n", "3", "--samples", "5"}).code == 2);
  CHECK(cli({"verify", "--m", "3", "--n", "3", "--exhaustive", "--seed", "1"})
            .code
        == 2);
  auto const big = cli({"verify", "--m", "6", "--n", "6", "--exhaustive"});
  CHECK(big.code == 2);
  CHECK(big.err.find("sampled") != std::string::npos);
  CHECK(cli({"verify", "--m", "3", "--n", "3", "--exhaustive", "--ops", "0011"})
            .code
        == 2);
}

TEST_CASE("reproduce") {
  auto const ok = cli({"reproduce", "example-1"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("match yes") != std::string::npos);
  CHECK(cli({"reproduce", "prop-1", "--m", "3", "--n", "4"}).code == 0);
  CHECK(cli({"reproduce", "example-3.4"}).code == 1);
  CHECK(cli({"reproduce", "example-7"}).code == 2);
  CHECK(cli({"reproduce", "example-1", "--m", "3"}).code == 2);
}

TEST_CASE("usage") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  auto const help = cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("verify") != std::string::npos);
  CHECK(cli({"verify", "--help"}).code == 0);
}

}  // TEST_SUITE
