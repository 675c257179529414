#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qmap/cli.hpp"
#include "qmap/enumeration.hpp"

using namespace qmap;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "qmap");
  std::vector<const char*> argv;
  for (const auto& lhs : args) argv.push_back(lhs.c_str());
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& start) { return std::count(start.begin(), start.end(), '\n'); }

}  // namespace

TEST_CASE("usage errors") {
  CHECK(invoke({}).code == kExitUsage);
  CHECK(invoke({"sample", "--kind", "tree"}).code == kExitUsage);
  CHECK(invoke({"sample", "--kind", "forest", "--n", "3"}).code == kExitUsage);
  CHECK(invoke({"enumerate", "--kind", "embedded", "--n", "9"}).code == kExitUsage);
  CHECK(invoke({"decode", "--kind", "quad", "--in", "/nonexistent/file"}).code == kExitUsage);
  CHECK(invoke({"experiment", "radius", "--config", "/nonexistent/file"}).code == kExitUsage);
  CHECK(invoke({"--help"}).code == kExitOk);
}

TEST_CASE("sampling is reproducible") {
  const auto first_run = invoke({"sample", "--kind", "well-labelled", "--n", "30", "--count", "5", "--seed", "4"});
  const auto second_run = invoke({"sample", "--kind", "well-labelled", "--n", "30", "--count", "5", "--seed", "4"});
  CHECK(first_run.code == kExitOk);
  CHECK(first_run.out == second_run.out);
  CHECK(lines(first_run.out) == 5);
  std::istringstream rows(first_run.out);
  for (std::string row; std::getline(rows, row);) CHECK(is_well_labelled(parse_embedded(row)));
  const auto third_run = invoke({"sample", "--kind", "well-labelled", "--n", "30", "--count", "5", "--seed", "5"});
  CHECK(third_run.out != first_run.out);
  // Record i does not depend on how many records are asked for.
  const auto first = invoke({"sample", "--kind", "well-labelled", "--n", "30", "--count", "1", "--seed", "4"});
  CHECK(first_run.out.rfind(first.out, 0) == 0);

  const auto maps = invoke({"sample", "--kind", "quadrangulation", "--n", "6", "--count", "3"});
  CHECK(maps.code == kExitOk);
  CHECK(lines(maps.out) == 3 * (2 + 24));
}

TEST_CASE("encode and decode round trips") {
  const auto trees = invoke({"sample", "--kind", "well-labelled", "--n", "12", "--count", "20"}).out;
  for (const char* kind : {"quad", "contour", "blossom"}) {
    const auto enc = invoke({"encode", "--kind", kind}, trees);
    REQUIRE(enc.code == kExitOk);
    const auto dec = invoke({"decode", "--kind", kind}, enc.out);
    CHECK(dec.code == kExitOk);
    CHECK(dec.out == trees);
  }
  const auto embedded = invoke({"sample", "--kind", "embedded", "--n", "12", "--count", "20"}).out;
  CHECK(invoke({"encode", "--kind", "quad"}, embedded).code == kExitFailure);
  const auto contour = invoke({"encode", "--kind", "contour"}, embedded);
  CHECK(invoke({"decode", "--kind", "contour"}, contour.out).out == embedded);
}

TEST_CASE("rejected input") {
  const auto bad = invoke({"decode", "--kind", "contour"}, "UUDD +--+\n");
  CHECK(bad.code == kExitFailure);
  CHECK(bad.err.find("record 1") != std::string::npos);
  CHECK(invoke({"decode", "--kind", "blossom"}, "S(FFF)\n").code == kExitFailure);
  CHECK(invoke({"decode", "--kind", "quad"}, "map 2 0\n0 1 0\n1 0 1\nend\n").code == kExitFailure);
  CHECK(invoke({"verify", "--suite", "input"}, "(()) -\n").code == kExitFailure);
}

TEST_CASE("enumeration") {
  const auto wl = invoke({"enumerate", "--kind", "well-labelled", "--n", "3"});
  CHECK(wl.code == kExitOk);
  CHECK(lines(wl.out) == 54);
  const auto quads = invoke({"enumerate", "--kind", "quadrangulation", "--n", "2"});
  CHECK(quads.code == kExitOk);
  std::size_t blocks = 0;
  std::istringstream rows(quads.out);
  for (std::string row; std::getline(rows, row);) blocks += row == "end";
  CHECK(blocks == 9);
  CHECK(lines(invoke({"enumerate", "--kind", "tree", "--n", "5"}).out) == 42);
}

TEST_CASE("verification suites") {
  for (const char* suite : {"bijection", "cycle-lemma", "classes", "counts"}) {
    const auto outcome = invoke({"verify", "--suite", suite, "--n-max", "4"});
    INFO(suite << "\n" << outcome.out << outcome.err);
    CHECK(outcome.code == kExitOk);
    CHECK(outcome.out.find("FAIL") == std::string::npos);
    CHECK(outcome.out.find("ok") != std::string::npos);
  }
  const auto trees = invoke({"sample", "--kind", "well-labelled", "--n", "50", "--count", "10"}).out;
  const auto maps = invoke({"encode", "--kind", "quad"}, trees).out;
  const auto back = invoke({"decode", "--kind", "quad"}, maps).out;
  CHECK(invoke({"verify", "--suite", "input"}, back).code == kExitOk);
}

TEST_CASE("experiments from the command line") {
  const auto dir = std::filesystem::temp_directory_path() / "qmap_cli_test";
  std::filesystem::create_directories(dir);
  const auto config = (dir / "tail.json").string();
  std::ofstream(config) << R"({"kind": "tail", "sizes": [50], "samples": 40})";
  const auto outcome = invoke({"experiment", "tail", "--config", config, "--jobs", "2"});
  CHECK(outcome.code == kExitOk);
  CHECK(outcome.out.find("\"run_id\"") != std::string::npos);
  CHECK(invoke({"experiment", "radius", "--config", config}).code == kExitUsage);
  std::ofstream(config) << R"({"kind": "tail", "sizes": [50], "surprise": 1})";
  CHECK(invoke({"experiment", "tail", "--config", config}).code == kExitUsage);
  std::filesystem::remove_all(dir);
}
