#pragma once

#include <string>
#include <vector>

#include "khov/diagram.hpp"

namespace khov {

// Built-in diagrams. Entries sharing `equivalence_class` are related by
// Reidemeister moves.
struct CorpusEntry {
  std::string name;
  std::string equivalence_class;
  std::string pd;
};

const std::vector<CorpusEntry>& corpus();
const CorpusEntry& corpus_entry(const std::string& name);

// Closure of a braid word on `strands` strands; letter ±i is σ_i^{±1}, 1 <= i < strands.
Diagram braid_closure(int strands, const std::vector<int>& word);

}  // namespace khov
