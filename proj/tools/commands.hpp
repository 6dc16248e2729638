#pragma once

#include <string>
#include <utility>
#include <vector>

#include "finspec/caps.hpp"
#include "finspec/ring.hpp"
#include "finspec/verify.hpp"

namespace finspec::cli {

struct Output {
  std::string text;
  int exit_code = 0;
};

/// Caps resolution order: built-in defaults, then FINSPEC_* environment
/// variables, then the --caps flag ("max_ring_size=64,subset_bound=2").
Caps resolve_caps(const std::string& caps_flag);

Output cmd_table1(const std::string& ring_spec, const std::string& format,
                  const Caps& caps);

Output cmd_verify(const CorpusConfig& config, const std::vector<std::string>& checks,
                  const std::string& format);

Output cmd_export(const std::string& ring_spec, const std::string& what,
                  const std::string& format, const Caps& caps);

Output cmd_spectrum(const std::string& ring_spec, const std::string& format,
                    const Caps& caps);

/// sends: "elem=elem" pairs by element index, with "x" accepted for the class
/// of the indeterminate in a polynomial quotient source.
Output cmd_hom(const std::string& source_spec, const std::string& target_spec,
               const std::vector<std::string>& sends, const std::string& format,
               const Caps& caps);

Output cmd_localize(const std::string& ring_spec, const std::string& set_csv,
                    const std::string& format, const Caps& caps);

/// Reads {"rings":[...],"caps":{...}} written by the schema in the README.
CorpusConfig corpus_from_json(const std::string& text, const Caps& base);

}  // namespace finspec::cli
