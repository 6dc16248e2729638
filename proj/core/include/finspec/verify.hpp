#pragma once

#include <optional>
#include <string>
#include <vector>

#include "finspec/caps.hpp"
#include "finspec/checks.hpp"
#include "finspec/hom.hpp"
#include "finspec/spectrum.hpp"

namespace finspec {

struct CorpusConfig {
  std::vector<std::string> ring_specs;
  Caps caps;
};

/// A field, local rings with nilpotents, products with idempotents, and the
/// modular range Z2..Z12.
CorpusConfig default_corpus();

/// Check groups runnable via --check: axioms, prop22, topology, zariski,
/// table2, connectedness, morphisms, homs, localization.
std::vector<std::string> known_checks();

struct RingVerifyResult {
  std::string spec;
  std::string label;  // empty when construction failed
  std::optional<std::string> error;
  std::vector<CheckItem> ring_checks;  // axioms + element-class inventory
  std::optional<Prop22Report> prop22;
  std::optional<KSpaceTheoremReport> kspace;
  std::optional<ZariskiReport> zariski;
  std::optional<Table2Report> table2;
  std::vector<CheckItem> morphism_checks;  // per-ring certificates
  bool ok() const;
};

struct HomVerifyResult {
  std::string name;
  std::optional<std::string> error;
  std::vector<CheckItem> items;
  bool ok() const;
};

struct VerifyReport {
  CorpusConfig config;
  std::vector<std::string> checks_run;
  std::vector<RingVerifyResult> rings;
  std::vector<HomVerifyResult> homs;
  std::size_t pass_count = 0;
  std::size_t fail_count = 0;
  std::size_t known_discrepancy_count = 0;
  std::size_t error_count = 0;

  bool ok() const { return fail_count == 0 && error_count == 0; }
  std::string to_json() const;  // byte-deterministic for a fixed config
  std::string to_text() const;
};

/// Runs the selected check groups over the corpus (all groups when `checks`
/// is empty).  Rings are processed concurrently and merged in input order;
/// per-ring errors are recorded without aborting the corpus.
VerifyReport run_verify(const CorpusConfig& config,
                        const std::vector<std::string>& checks = {});

}  // namespace finspec
