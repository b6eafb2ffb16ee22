#pragma once

#include "sr/complex.hpp"
#include "sr/field.hpp"

#include <string>
#include <vector>

namespace sr {

struct CorpusEntry {
    std::string name;
    SimplicialComplex complex;
};

// Fixed, deterministic collection of named complexes exercising every
// generator family plus perturbations (non-minimal-multiplicity instances,
// a sandwich intermediate, degenerate shapes). Shared by the verification
// bundles and the test suites.
const std::vector<CorpusEntry>& standard_corpus();

// The subset eligible for the seven-way minimal-multiplicity equivalence
// over f: Buchsbaum with codim >= 2 and finite 2 <= indeg <= d.
std::vector<CorpusEntry> equivalence_corpus(const FieldSpec& f);

// The subset with a defined Alexander dual (codim >= 2, indeg >= 2).
std::vector<CorpusEntry> dualizable_corpus();

} // namespace sr
