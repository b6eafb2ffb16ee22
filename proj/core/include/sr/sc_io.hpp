#pragma once

#include "sr/complex.hpp"
#include "sr/cover.hpp"
#include "sr/hochster.hpp"
#include "sr/ring_props.hpp"

#include <string>

namespace sr {

/**
 * The ".sc" text format:
 *
 *   # optional comments, full-line or trailing
 *   vertices <n>
 *   <v1> <v2> ... <vk>     one facet per line, 0-based vertex indices
 *
 * Parsing is whitespace-insensitive; errors carry line/column positions.
 * Serialization emits facets in lexicographic order.
 */
SimplicialComplex parse_sc(const std::string& text,
                           const std::string& source_name = "<input>");
SimplicialComplex load_sc(const std::string& path);
std::string to_sc(const SimplicialComplex& dl);
void save_sc(const SimplicialComplex& dl, const std::string& path);

// JSON serializations. All objects are emitted with sorted keys and carry
// "schema_version"; exact rationals appear as "num/den" strings. Identical
// inputs produce byte-identical output.
std::string report_to_json(const PropertyReport& report);
std::string betti_to_json(const BettiTable& table);
std::string homology_to_json(const HomologyProfile& profile);
std::string graded_dims_to_json(const GradedDims& dims);
std::string cover_to_json(const CoverResult& result);
std::string outcome_to_json(const RealizationOutcome& outcome);

// Human-readable summary used by the CLI --text mode.
std::string report_to_text(const PropertyReport& report);

std::string rat_to_string(const Rat& r);

} // namespace sr
