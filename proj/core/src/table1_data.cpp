#include "bsg/prisms.hpp"

namespace bsg {

// 38 Hamiltonian paths of the 6-prism, grouped by target word.
// Symbols: i, k, l with l the generator below k; paths are 11 steps
// over the 12 vertices.
const std::vector<Table1Entry>& table1_entries() {
  static const std::vector<Table1Entry> kEntries = {
      // target l
      {"l", "klklilklkli"},
      {"l", "klkiklklkik"},
      {"l", "klilklklilk"},
      {"l", "kiklklkiklk"},
      {"l", "ilklklilklk"},
      {"l", "ikilikiliki"},
      // target k
      {"k", "lklkiklklki"},
      {"k", "lklilklklil"},
      {"k", "lkiklklkikl"},
      {"k", "lilklklilkl"},
      {"k", "ilikilikili"},
      {"k", "iklklkiklkl"},
      // target i
      {"i", "lklklilklkl"},
      {"i", "likilikilik"},
      {"i", "klklkiklklk"},
      {"i", "kilikilikil"},
      // target lkl
      {"lkl", "lkiklkiliki"},
      {"lkl", "lilkiliklil"},
      {"lkl", "klilklikili"},
      {"lkl", "kiklikilkik"},
      {"lkl", "ilikilklilk"},
      {"lkl", "ikiliklkikl"},
      // target lki
      {"lki", "lklikiliklk"},
      {"lki", "lilkilikili"},
      {"lki", "klklkilklkl"},
      {"lki", "klkiklkliki"},
      {"lki", "klilkliklil"},
      {"lki", "kikliklkikl"},
      {"lki", "iliklklilkl"},
      {"lki", "ikilikilkik"},
      // target kli
      {"kli", "lklkliklklk"},
      {"kli", "lklilklkili"},
      {"kli", "lkiklkilkik"},
      {"kli", "lilkilklilk"},
      {"kli", "klkilikilkl"},
      {"kli", "kiklikiliki"},
      {"kli", "ilikiliklil"},
      {"kli", "ikilklkiklk"},
  };
  return kEntries;
}

}  // namespace bsg
