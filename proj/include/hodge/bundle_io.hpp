#pragma once

#include <string>

#include "hodge/bundle.hpp"

namespace hodge {

// Builds a bundle from its JSON description. Throws ParseError for JSON or
// expression syntax problems (with the offending entry path in the message),
// ValidationError for structural problems (non-Hermitian metric entries,
// conjugated coordinates inside the Higgs field, shape mismatches), all of
// them aggregated into one report.
HiggsBundleChart bundle_from_json(const std::string& text);

// File variant; IO failures surface as Error.
HiggsBundleChart load_bundle(const std::string& path);

// Deterministic rendering: fixed key order, two-space indent, expressions
// printed in their canonical form. Equal bundles produce equal bytes.
std::string bundle_to_json(const HiggsBundleChart& bundle);

// Writes the catalog fixture to a file in the same format.
void emit_fixture(const std::string& name, const std::string& path);

}  // namespace hodge
