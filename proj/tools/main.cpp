#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "finspec/errors.hpp"

namespace {

int emit(const finspec::cli::Output& out, const std::string& path) {
  if (path.empty()) {
    std::cout << out.text;
  } else {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << path << "\n";
      return 1;
    }
    f << out.text;
  }
  return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite ring spectra, ideal lattices and k-topologies"};
  app.require_subcommand(1);

  std::string ring_spec = "Z4";
  std::string format = "text";
  std::string out_path;
  std::string caps_flag;
  std::string what = "spi-topology";
  std::string source_spec, target_spec, set_csv = "1", corpus_path;
  std::vector<std::string> sends, rings, checks;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "text|json|dot")->capture_default_str();
    cmd->add_option("--out", out_path, "write output to a file instead of stdout");
    cmd->add_option("--caps", caps_flag, "cap overrides, e.g. max_ring_size=64,subset_bound=2");
  };

  CLI::App* table1 = app.add_subcommand(
      "table1", "minimal-degree annihilator families and exact algebraic-set "
                "witnesses for every subset of a small ring");
  table1->add_option("--ring", ring_spec, "ring spec, e.g. Z4")->capture_default_str();
  add_common(table1);

  CLI::App* verify = app.add_subcommand(
      "verify", "run the full property suites over a ring corpus");
  verify->add_option("--ring", rings, "ring specs (repeatable; default corpus otherwise)");
  verify->add_option("--check", checks, "restrict to named check groups (repeatable)");
  verify->add_option("--corpus", corpus_path, "corpus config JSON file");
  add_common(verify);

  CLI::App* exp = app.add_subcommand("export", "export lattices, topologies and rings");
  exp->add_option("--ring", ring_spec, "ring spec")->capture_default_str();
  exp->add_option("--what", what,
                  "ring|idl-lattice|spi-topology|spec-topology|specialization")
      ->capture_default_str();
  add_common(exp);

  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "ideal families, k-space report and the Zariski comparison");
  spectrum->add_option("--ring", ring_spec, "ring spec")->capture_default_str();
  add_common(spectrum);

  CLI::App* hom = app.add_subcommand(
      "hom", "build a homomorphism from generator images and certify it");
  hom->add_option("--source", source_spec, "source ring spec")->required();
  hom->add_option("--target", target_spec, "target ring spec")->required();
  hom->add_option("--send", sends,
                  "generator image, e.g. x=3 or 2=0 (repeatable; 0,1 are implied)");
  add_common(hom);

  CLI::App* localize = app.add_subcommand(
      "localize", "localize at a multiplicative set and certify the embedding");
  localize->add_option("--ring", ring_spec, "ring spec")->capture_default_str();
  localize->add_option("--set", set_csv, "generators of S, e.g. 1,3")->capture_default_str();
  add_common(localize);

  CLI11_PARSE(app, argc, argv);

  try {
    const finspec::Caps caps = finspec::cli::resolve_caps(caps_flag);
    finspec::cli::Output out;
    if (table1->parsed()) {
      out = finspec::cli::cmd_table1(ring_spec, format, caps);
    } else if (verify->parsed()) {
      finspec::CorpusConfig config;
      if (!corpus_path.empty()) {
        std::ifstream f(corpus_path);
        if (!f) {
          std::cerr << "error: cannot read " << corpus_path << "\n";
          return 1;
        }
        std::string text((std::istreambuf_iterator<char>(f)),
                         std::istreambuf_iterator<char>());
        config = finspec::cli::corpus_from_json(text, caps);
      } else {
        config = finspec::default_corpus();
        config.caps = caps;
        if (!rings.empty()) config.ring_specs = rings;
      }
      out = finspec::cli::cmd_verify(config, checks, format);
    } else if (exp->parsed()) {
      out = finspec::cli::cmd_export(ring_spec, what, format, caps);
    } else if (spectrum->parsed()) {
      out = finspec::cli::cmd_spectrum(ring_spec, format, caps);
    } else if (hom->parsed()) {
      out = finspec::cli::cmd_hom(source_spec, target_spec, sends, format, caps);
    } else if (localize->parsed()) {
      out = finspec::cli::cmd_localize(ring_spec, set_csv, format, caps);
    }
    return emit(out, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
