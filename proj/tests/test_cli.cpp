#include "doctest.h"

#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "finspec/ring_spec.hpp"

using namespace finspec;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

const std::string kGoldenDir = std::string(FINSPEC_SOURCE_DIR) + "/tests/golden/";

}  // namespace

TEST_CASE("table1 output is byte-identical to the golden") {
  const cli::Output out = cli::cmd_table1("Z4", "text", Caps{});
  CHECK(out.exit_code == 0);
  CHECK(out.text == read_file(kGoldenDir + "table1_z4.txt"));
}

TEST_CASE("table2 output is byte-identical to the golden") {
  const Table2Report rep = compare_spaces(parse_ring_spec("Z6"));
  CHECK(table2_text(rep) == read_file(kGoldenDir + "table2_z6.txt"));
}

TEST_CASE("verify runs green on the default corpus") {
  const cli::Output out = cli::cmd_verify(default_corpus(), {}, "text");
  CHECK(out.exit_code == 0);
  CHECK(out.text.find("-> OK") != std::string::npos);
}

TEST_CASE("verify is deterministic") {
  const cli::Output a = cli::cmd_verify(default_corpus(), {}, "json");
  const cli::Output b = cli::cmd_verify(default_corpus(), {}, "json");
  CHECK(a.text == b.text);
  CHECK(a.exit_code == 0);
}

TEST_CASE("verify reports per-ring resource errors without aborting") {
  CorpusConfig config = default_corpus();
  config.caps.max_ring_size = 2;
  const cli::Output out = cli::cmd_verify(config, {}, "text");
  CHECK(out.exit_code == 1);
  // Z2 still verifies; the others report their cap error.
  CHECK(out.text.find("== Z2 ==") != std::string::npos);
  CHECK(out.text.find("max_ring_size") != std::string::npos);
  CHECK(out.text.find("errors 0") == std::string::npos);
}

TEST_CASE("verify check filter") {
  CorpusConfig config;
  config.ring_specs = {"Z6"};
  const cli::Output out = cli::cmd_verify(config, {"connectedness"}, "text");
  CHECK(out.exit_code == 0);
  CHECK(out.text.find("Spi connected: yes") != std::string::npos);
  CHECK(out.text.find("Spec connected: no") != std::string::npos);

  const cli::Output bad = cli::cmd_verify(config, {"nonsense"}, "text");
  CHECK(bad.exit_code == 1);
}

TEST_CASE("parse errors are reported per ring, not thrown") {
  CorpusConfig config;
  config.ring_specs = {"Z6", "Qx"};
  const cli::Output out = cli::cmd_verify(config, {"axioms"}, "json");
  CHECK(out.exit_code == 1);
  CHECK(out.text.find("\"error\"") != std::string::npos);
  CHECK(out.text.find("position") != std::string::npos);
}

TEST_CASE("export formats") {
  const Caps caps;
  const cli::Output ring = cli::cmd_export("Z2xZ3", "ring", "json", caps);
  CHECK(ring.exit_code == 0);
  CHECK(FiniteRing::from_json(ring.text).same_tables(parse_ring_spec("Z2xZ3")));

  const cli::Output hasse = cli::cmd_export("Z6", "idl-lattice", "dot", caps);
  CHECK(hasse.exit_code == 0);
  CHECK(hasse.text.find("digraph") != std::string::npos);

  const cli::Output spec_json = cli::cmd_export("Z6", "spec-topology", "json", caps);
  CHECK(spec_json.exit_code == 0);
  CHECK(spec_json.text.find("closed_sets") != std::string::npos);

  const cli::Output spi_dot = cli::cmd_export("Z4", "specialization", "dot", caps);
  CHECK(spi_dot.exit_code == 0);
  CHECK(spi_dot.text.find("p0 -> p1") != std::string::npos);

  const cli::Output bad = cli::cmd_export("Z4", "nonsense", "text", caps);
  CHECK(bad.exit_code == 1);
}

TEST_CASE("spectrum command") {
  const cli::Output out = cli::cmd_spectrum("Z6", "text", Caps{});
  CHECK(out.exit_code == 0);
  CHECK(out.text.find("Spi = {(0),(3),(2)}") != std::string::npos);
  CHECK(out.text.find("Zariski space vs k-space") != std::string::npos);

  const cli::Output json = cli::cmd_spectrum("Z6", "json", Caps{});
  CHECK(json.exit_code == 0);
  CHECK(json.text.find("\"Spm\"") != std::string::npos);
}

TEST_CASE("hom command") {
  const Caps caps;
  const cli::Output out = cli::cmd_hom("Z4", "Z2", {}, "text", caps);
  CHECK(out.exit_code == 0);
  CHECK(out.text.find("kernel (2)") != std::string::npos);
  CHECK(out.text.find("surjective") != std::string::npos);

  // Frobenius via the x= sugar.
  const cli::Output frob = cli::cmd_hom("Z2[x]/(x^2+x+1)", "Z2[x]/(x^2+x+1)",
                                        {"x=3"}, "json", caps);
  CHECK(frob.exit_code == 0);
  CHECK(frob.text.find("\"injective\": true") != std::string::npos);

  const cli::Output invalid = cli::cmd_hom("Z2", "Z6", {}, "text", caps);
  CHECK(invalid.exit_code == 1);
}

TEST_CASE("localize command") {
  const cli::Output out = cli::cmd_localize("Z6", "3", "text", Caps{});
  CHECK(out.exit_code == 0);
  CHECK(out.text.find("A_S = Z6/(2)") != std::string::npos);
  CHECK(out.text.find("closed, continuous, injective") != std::string::npos);

  const cli::Output bad = cli::cmd_localize("Z4", "2", "text", Caps{});
  CHECK(bad.exit_code == 1);  // closure reaches 0
}

TEST_CASE("caps parsing") {
  const Caps caps = cli::resolve_caps("max_ring_size=64,subset_bound=2");
  CHECK(caps.max_ring_size == 64);
  CHECK(caps.subset_bound == 2);
  CHECK(caps.max_closed_sets == Caps{}.max_closed_sets);
  CHECK_THROWS_AS(cli::resolve_caps("bogus=1"), domain_error);
}

TEST_CASE("corpus config from JSON") {
  const std::string text = R"({"rings":["Z4","Z6"],"caps":{"max_ring_size":32}})";
  const CorpusConfig config = cli::corpus_from_json(text, Caps{});
  CHECK(config.ring_specs == std::vector<std::string>{"Z4", "Z6"});
  CHECK(config.caps.max_ring_size == 32);
  CHECK_THROWS_AS(cli::corpus_from_json("nope", Caps{}), domain_error);
}
