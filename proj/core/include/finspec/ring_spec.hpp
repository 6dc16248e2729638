#pragma once

#include <string>
#include <string_view>

#include "finspec/caps.hpp"
#include "finspec/ring.hpp"

namespace finspec {

/// Parses the ring construction grammar and builds the ring:
///
///   ring := atom ("x" atom)*
///   atom := "Z" integer | "Z" integer "[x]/(" poly ")"
///   poly := terms in descending degree, e.g. "x^2+x+1"; coefficients are
///           reduced mod the base and the modulus must be monic.
///
/// "x" between atoms is the direct product; inside "(...)" it is the
/// indeterminate.  Rejects bad input with a position-annotated parse_error.
FiniteRing parse_ring_spec(std::string_view spec, const Caps& caps = {});

}  // namespace finspec
