// The running-example database, built in code.
#pragma once

#include "ordlattice/eval.hpp"

namespace fixtures {

using namespace ordlattice;

inline PoRelation chain_of(std::size_t arity, std::vector<Tuple> rows) {
  std::vector<IdPair> pairs;
  for (Id i = 0; i + 1 < rows.size(); ++i) pairs.push_back({i, i + 1});
  return PoRelation::from_pairs(arity, std::move(rows), pairs);
}

inline PoDatabase paris() {
  PoDatabase db;
  db.add("Rest", chain_of(2, {{"G", 8}, {"TA", 5}}));
  db.add("Hotel", chain_of(2, {{"M", 5}, {"B", 8}, {"M", 12}}));
  db.add("Hotel2", chain_of(2, {{"B", 8}, {"M", 5}, {"M", 12}}));
  return db;
}

inline PoRelation cuisines() {
  return PoRelation::from_pairs(
      2,
      {{"Gagnaire", "fr"}, {"Italia", "it"}, {"TourArgent", "fr"}, {"Verdi", "it"}, {"Tsukizi", "jp"},
       {"Sola", "jp"}},
      {{0, 2}, {1, 2}, {2, 4}, {3, 4}, {3, 5}});
}

inline PoDatabase merged_ranking() {
  PoDatabase db;
  db.add("Rest", chain_of(2, {{"Gagnaire", 8}, {"TourArgent", 5}}));
  db.add("Rest2", chain_of(1, {{"Tsukizi"}, {"Gagnaire"}}));
  return db;
}

inline ListRelation list_of(std::vector<Tuple> rows) { return ListRelation(std::move(rows)); }

}  // namespace fixtures
