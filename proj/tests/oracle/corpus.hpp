#pragma once

// Published example words with their standard permutation, nice positions
// and preimages, loaded from data/golden_corpus.csv. A cell printed with a
// known error carries typo = true and keeps the printed text.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace oracle {

struct PrintedValue {
  std::string text;
  bool typo = false;
};

struct CorpusEntry {
  std::string source;
  std::string word;
  PrintedValue sigma;
  std::size_t h = 0;
  bool h_typo = false;
  std::vector<std::size_t> nice;
  // Position -> preimage as printed, including the trailing '$'.
  std::map<std::size_t, PrintedValue> preimages;
};

const std::vector<CorpusEntry>& golden_corpus();

}  // namespace oracle
