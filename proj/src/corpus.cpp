#include "khov/corpus.hpp"

#include <algorithm>
#include <map>

#include "khov/errors.hpp"

namespace khov {

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = {
      {"unknot-0", "unknot", ""},
      {"unknot-kink+", "unknot", "X[1,1,2,2]"},
      {"unknot-kink-", "unknot", "X[1,2,2,1]"},
      {"unknot-kinks++", "unknot", "X[4,1,2,2] X[1,4,3,3]"},
      {"unknot-kinks+-", "unknot", "X[4,1,2,2] X[1,3,3,4]"},
      {"hopf", "hopf", "X[4,1,3,2] X[2,3,1,4]"},
      {"trefoil", "trefoil", "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"},
      {"trefoil-r1+", "trefoil", "X[8,4,2,5] X[3,6,4,1] X[5,2,6,3] X[1,8,7,7]"},
      {"trefoil-r1-", "trefoil", "X[8,4,2,5] X[3,6,4,1] X[5,2,6,3] X[1,7,7,8]"},
      {"trefoil-r2", "trefoil", "X[8,4,2,5] X[10,6,4,1] X[5,2,6,3] X[3,7,9,8] X[9,7,10,1]"},
      {"figure-eight", "figure-eight", "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"},
      {"figure-eight-r2", "figure-eight", "X[12,2,5,10] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8] X[1,4,9,11] X[9,12,10,11]"},
      {"figure-eight-r2r3", "figure-eight",
       "X[12,2,5,10] X[1,7,9,6] X[5,4,6,11] X[2,7,3,8] X[8,3,1,4] X[9,12,10,11]"},
  };
  return entries;
}

const CorpusEntry& corpus_entry(const std::string& name) {
  for (const auto& e : corpus())
    if (e.name == name) return e;
  throw Error(Errc::UnknownSymbol, "no corpus entry " + name);
}

Diagram braid_closure(int strands, const std::vector<int>& word) {
  if (strands < 1) throw Error(Errc::IndexOutOfRange, "a braid needs a strand");
  std::vector<int> label(strands);
  for (int s = 0; s < strands; ++s) label[s] = s + 1;
  int next = strands + 1;
  std::vector<PdTuple> xs;
  for (int letter : word) {
    const int i = std::abs(letter) - 1;
    if (letter == 0 || i + 1 >= strands) throw Error(Errc::IndexOutOfRange, "braid letter out of range");
    const int lo = label[i], hi = label[i + 1];
    const int out_lo = next++, out_hi = next++;
    if (letter > 0) {
      xs.push_back({hi, out_hi, out_lo, lo});
    } else {
      xs.push_back({lo, hi, out_hi, out_lo});
    }
    label[i] = out_lo;
    label[i + 1] = out_hi;
  }
  // Close up: the last label of each strand becomes its first, then compact.
  std::map<int, int> close;
  int loops = 0;
  for (int s = 0; s < strands; ++s) {
    if (label[s] == s + 1) ++loops;
    close[label[s]] = s + 1;
  }
  std::map<int, int> compact;
  for (auto& x : xs)
    for (int& l : x) {
      if (auto it = close.find(l); it != close.end()) l = it->second;
      compact.emplace(l, 0);
    }
  int id = 1;
  for (auto& [l, v] : compact) v = id++;
  for (auto& x : xs)
    for (int& l : x) l = compact[l];
  return Diagram::make(std::move(xs), loops);
}

}  // namespace khov
