#include <doctest.h>

#include <fstream>
#include <sstream>

#include "symbool/error.hpp"
#include "symbool/reproduce.hpp"

using namespace symbool;

namespace {

std::string golden(std::string const& id) {
  std::ifstream in(std::string(SYMBOOL_GOLDEN_DIR) + "/" + id + ".txt");
  REQUIRE_MESSAGE(in.good(), "missing golden file for " << id);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_SUITE("reproduce") {

TEST_CASE("reports match their golden files") {
  for (auto const& id : reproduce_ids()) {
    CAPTURE(id);
    CHECK(reproduce(id).text == golden(id));
  }
}

TEST_CASE("report verdicts") {
  CHECK(reproduce("example-1").matches);
  CHECK(reproduce("example-2.2").matches);
  CHECK(reproduce("example-3.2").matches);
  CHECK(reproduce("example-3.3").matches);
  CHECK(reproduce("prop-1").matches);
  // The non-xor complexities for the (4,4) instances come out as 16, not 12.
  auto const r = reproduce("example-3.4");
  CHECK_FALSE(r.matches);
  CHECK(r.text.find("complexity xor 4") != std::string::npos);
  CHECK(r.text.find("complexity and 16") != std::string::npos);
}

TEST_CASE("prop-1 for a single shape") {
  auto const r = reproduce("prop-1", 3, 4);
  CHECK(r.matches);
  CHECK(r.text == "prop-1\nm 3 n 4\n"
                  "  or L''=12 L'=12\n"
                  "  and L''=12 L'=12\n"
                  "  xor L''=12 L'=12\n"
                  "  diff L''=12 L'=12\n"
                  "  rdiff L''=12 L'=12\n"
                  "match yes\n");
  CHECK_THROWS_AS(reproduce("prop-1", 2, 4), InvalidArgument);
}

TEST_CASE("bad ids and options") {
  CHECK_THROWS_AS(reproduce("example-9"), InvalidArgument);
  CHECK_THROWS_AS(reproduce("example-1", 3, 3), InvalidArgument);
}

}  // TEST_SUITE
