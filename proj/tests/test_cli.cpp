#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cayley/cli.hpp"
#include "cayley/families.hpp"
#include "cayley/io.hpp"

using namespace cayley;

namespace {

struct CliResult {
  int status;
  std::string out;
  std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("/tmp/cayley_test_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("analyze builtin groups") {
  const CliResult r = cli({"analyze", "builtin", "q:8", "--format", "json"});
  CHECK(r.status == 0);
  const json j = json::parse(r.out);
  CHECK(j["name"] == "q:8");
  CHECK(j["profile"]["cent_count"] == 4);
  CHECK(j["special_family"]["is_extraspecial"] == true);

  const CliResult abelian = cli({"analyze", "builtin", "c:5", "--format", "json"});
  CHECK(json::parse(abelian.out)["profile"]["cent_count"] == 1);

  const CliResult text = cli({"analyze", "c:5"});
  CHECK(text.status == 0);
  CHECK(text.out.find("|Cent(G)|") != std::string::npos);

  const CliResult multi = cli({"analyze", "q:8", "s:3", "--format", "json"});
  const json arr = json::parse(multi.out);
  REQUIRE(arr.is_array());
  CHECK(arr.size() == 2);
  CHECK(arr[1]["profile"]["cent_count"] == 5);
}

TEST_CASE("compare") {
  const CliResult r = cli({"compare", "builtin", "d:8", "builtin", "q:8", "--format", "json"});
  CHECK(r.status == 0);
  const json j = json::parse(r.out);
  CHECK(j["isomorphic"] == false);
  CHECK(j["isoclinic"] == true);
  CHECK(j["witness"].is_object());
  CHECK(j["isomorphism"].is_null());

  const CliResult same = cli({"compare", "c:6", "c:2xc:3", "--format", "json"});
  const json js = json::parse(same.out);
  CHECK(js["isomorphic"] == true);
  CHECK(js["isomorphism"].is_array());
}

TEST_CASE("subgroups listing") {
  const CliResult r = cli({"subgroups", "s:3", "--format", "json"});
  CHECK(r.status == 0);
  const json j = json::parse(r.out);
  CHECK(j["count"] == 6);
  int whole = 0;
  for (const auto& s : j["subgroups"])
    if (s["order"] == 6) {
      ++whole;
      CHECK(s["cent_count"] == 5);
    }
  CHECK(whole == 1);
}

TEST_CASE("catalog round-trips through the grammar") {
  const CliResult r = cli({"catalog", "--corpus-max-order", "8", "--format", "json"});
  CHECK(r.status == 0);
  const json j = json::parse(r.out);
  bool has_q8 = false;
  for (const auto& e : j) {
    has_q8 = has_q8 || e["name"] == "q:8";
    const FiniteGroup g = FamilySpec::parse(e["name"].get<std::string>()).build();
    CHECK(g.order() == e["order"].get<int>());
  }
  CHECK(has_q8);
}

TEST_CASE("convert and file inputs") {
  TempFile tmp("q8.cayley");
  const CliResult conv = cli({"convert", "builtin", "q:8", "--output", tmp.path});
  CHECK(conv.status == 0);

  const FiniteGroup back = read_cayley_file(tmp.path);
  CHECK(back == quaternion_group(2));
  CHECK(back.name() == "q:8");

  const CliResult stdout_conv = cli({"convert", "file", tmp.path});
  CHECK(stdout_conv.status == 0);
  CHECK(stdout_conv.out == cayley_text(quaternion_group(2)));

  // Analyze the S3 table from a file: 5 centralizers.
  TempFile s3file("s3.cayley");
  write_cayley_file(symmetric_group(3), s3file.path);
  const CliResult analyzed = cli({"analyze", s3file.path, "--format", "json"});
  CHECK(analyzed.status == 0);
  CHECK(json::parse(analyzed.out)["profile"]["cent_count"] == 5);
}

TEST_CASE("verify subcommand") {
  const CliResult r = cli({"verify", "--corpus-max-order", "8", "--checks",
                           "never_2_or_3,ppp1", "--format", "json"});
  CHECK(r.status == 0);
  const json j = json::parse(r.out);
  REQUIRE(j.is_array());
  CHECK(j.size() == 2);
  CHECK(j[0]["check_id"] == "never_2_or_3");
  CHECK(j[0]["verdict"] == "pass");

  const CliResult text = cli({"verify", "--corpus-max-order", "8", "--checks", "ppp1"});
  CHECK(text.status == 0);
  CHECK(text.out.find("suite: PASS") != std::string::npos);

  // Extra inputs join the corpus: one more instance for never_2_or_3.
  const int base_instances =
      json::parse(cli({"verify", "--corpus-max-order", "8", "--checks", "never_2_or_3",
                       "--format", "json"})
                      .out)[0]["instances_examined"]
          .get<int>();
  TempFile tmp("extra.cayley");
  write_cayley_file(dihedral_group(5).renamed("imported-d10"), tmp.path);
  const CliResult extra = cli({"verify", "file", tmp.path, "--corpus-max-order", "8",
                               "--checks", "never_2_or_3", "--format", "json"});
  CHECK(extra.status == 0);
  CHECK(json::parse(extra.out)[0]["instances_examined"].get<int>() == base_instances + 1);
}

TEST_CASE("usage errors exit 2") {
  CHECK(cli({}).status == 2);
  CHECK(cli({"bogus"}).status == 2);
  CHECK(cli({"analyze"}).status == 2);
  CHECK(cli({"compare", "q:8"}).status == 2);
  CHECK(cli({"analyze", "q:8", "--format", "yaml"}).status == 2);
}

TEST_CASE("computation errors exit 1 with machine-readable JSON") {
  const CliResult r = cli({"analyze", "builtin", "q:7", "--format", "json"});
  CHECK(r.status == 1);
  const json j = json::parse(r.out);
  CHECK(j["error"]["type"] == "bad_parameter");
  CHECK(j["error"]["message"].is_string());

  const CliResult text = cli({"analyze", "builtin", "q:7"});
  CHECK(text.status == 1);
  CHECK(text.out.empty());
  CHECK(!text.err.empty());

  const CliResult missing = cli({"analyze", "file", "/nonexistent.cayley", "--format", "json"});
  CHECK(missing.status == 1);
  CHECK(json::parse(missing.out)["error"]["type"] == "io_error");
}

TEST_CASE("json mode emits exactly one JSON document") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"analyze", "q:8", "--format", "json"},
           {"compare", "d:8", "q:8", "--format", "json"},
           {"catalog", "--corpus-max-order", "8", "--format", "json"},
           {"verify", "--corpus-max-order", "8", "--checks", "ppp1", "--format", "json"},
           {"analyze", "builtin", "q:7", "--format", "json"}}) {
    const CliResult r = cli(args);
    CHECK(json::accept(r.out));
  }
}

TEST_CASE("help exits 0") {
  CHECK(cli({"--help"}).status == 0);
}
