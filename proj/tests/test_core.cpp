#include <algorithm>

#include "doctest.h"
#include "generators.hpp"
#include "oracles.hpp"
#include "ordlattice/errors.hpp"
#include "ordlattice/extensions.hpp"
#include "ordlattice/partitions.hpp"

using namespace ordlattice;

TEST_CASE("values normalize canonical numerals") {
  CHECK(Value("12") == Value(12));
  CHECK(Value("012").is_string());
  CHECK(Value("0").is_natural());
  CHECK(Value("18446744073709551616").is_string());
  CHECK(Value(3) < Value("a"));
  CHECK(Value("a") < Value("b"));
  CHECK(Tuple{1, "x"}.at(2) == Value("x"));
}

TEST_CASE("closure matches Floyd-Warshall") {
  gen::Rng rng(11);
  for (int round = 0; round < 200; ++round) {
    std::size_t n = gen::uniform(rng, 0, 9);
    std::vector<Id> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<IdPair> pairs;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (gen::coin(rng, 0.25)) pairs.push_back({perm[i], perm[j]});
    std::vector<Tuple> labels(n, Tuple{1});
    PoRelation r = PoRelation::from_pairs(1, labels, pairs);
    auto c = oracle::closure(n, pairs);
    for (Id a = 0; a < n; ++a)
      for (Id b = 0; b < n; ++b) REQUIRE(r.less(a, b) == static_cast<bool>(c[a][b]));
    // Hasse pairs are exactly the non-transitive ones.
    for (Id a = 0; a < n; ++a)
      for (Id b = 0; b < n; ++b) {
        bool cover = c[a][b];
        for (Id m = 0; m < n && cover; ++m)
          if (c[a][m] && c[m][b]) cover = false;
        bool listed = std::binary_search(r.hasse().begin(), r.hasse().end(), IdPair{a, b});
        REQUIRE(cover == listed);
      }
  }
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(PoRelation::from_pairs(1, {{1}, {2}}, {{0, 1}, {1, 0}}), CycleError);
  CHECK_THROWS_AS(PoRelation::from_pairs(1, {{1}}, {{0, 0}}), CycleError);
  CHECK_THROWS_AS(PoRelation::from_pairs(2, {{1}}, {}), ArityError);
  try {
    PoRelation::from_pairs(1, {{1}, {2}, {3}}, {{0, 1}, {1, 2}, {2, 0}}, "R");
    FAIL("expected a cycle");
  } catch (const CycleError& e) {
    CHECK(e.cycle().size() == 3);
  }
}

TEST_CASE("general ids are densified in given order") {
  PoRelation r = validate_po_relation({40, -3, 7}, {{"a"}, {"b"}, {"c"}}, {{-3, 40}, {40, 7}}, 1);
  CHECK(r.size() == 3);
  CHECK(r.less(1, 0));
  CHECK(r.less(1, 2));
  CHECK(r.label(0) == Tuple{"a"});
  CHECK_THROWS(validate_po_relation({1, 1}, {{"a"}, {"b"}}, {}, 1));
  CHECK_THROWS(validate_po_relation({1}, {{"a"}}, {{1, 2}}, 1));
}

TEST_CASE("linear extensions match naive enumeration") {
  gen::Rng rng(5);
  for (int round = 0; round < 300; ++round) {
    PoRelation r = gen::random_poset(rng, gen::uniform(rng, 0, 7), 0.3);
    auto expected = oracle::all_extensions(r);
    std::vector<IdSequence> got;
    auto stream = linear_extensions(r);
    while (auto e = stream.next()) got.push_back(*e);
    REQUIRE(std::is_sorted(got.begin(), got.end()));
    std::sort(expected.begin(), expected.end());
    REQUIRE(got == expected);

    auto worlds = oracle::worlds(r);
    auto sorted = sorted_worlds(r);
    REQUIRE(std::vector<ListRelation>(worlds.begin(), worlds.end()) == sorted);
    REQUIRE(possible_worlds(r).size() == worlds.size());

    for (const auto& e : got) REQUIRE(is_linear_extension(r, e));
    REQUIRE(oracle::is_extension(r, canonical_extension(r)));
  }
}

TEST_CASE("empty and failed relations") {
  PoRelation empty(2);
  CHECK(possible_worlds(empty).size() == 1);
  PoRelation failed = PoRelation::complete_failure(2);
  CHECK(failed.failed());
  CHECK(possible_worlds(failed).empty());
  CHECK_FALSE(linear_extensions(failed).next().has_value());
}

TEST_CASE("world limit overflows") {
  std::vector<Tuple> labels;
  for (int i = 0; i < 9; ++i) labels.push_back({i});
  PoRelation r = PoRelation::from_pairs(1, labels, {});
  CHECK_THROWS_AS(possible_worlds(r, 100), OverflowError);
  CHECK(possible_worlds(r, 362880).size() == 362880);
  CHECK(some_worlds(r, 5).size() == 5);
}

TEST_CASE("permutation checks") {
  PoRelation r = PoRelation::from_pairs(1, {{1}, {2}}, {{0, 1}});
  CHECK(is_linear_extension(r, {0, 1}));
  CHECK_FALSE(is_linear_extension(r, {1, 0}));
  CHECK_THROWS_AS(is_linear_extension(r, {0, 0}), NotPermutationError);
  CHECK_THROWS_AS(is_linear_extension(r, {0}), NotPermutationError);
}

TEST_CASE("possible ranks are exactly the reachable positions") {
  gen::Rng rng(21);
  for (int round = 0; round < 150; ++round) {
    PoRelation r = gen::random_poset(rng, gen::uniform(rng, 2, 7), 0.3);
    auto exts = oracle::all_extensions(r);
    for (Id x = 0; x < r.size(); ++x) {
      std::set<std::size_t> at;
      for (const auto& e : exts) at.insert(std::find(e.begin(), e.end(), x) - e.begin() + 1);
      Interval b = index_bounds(r, x);
      REQUIRE(b.lo == *at.begin());
      REQUIRE(b.hi == *at.rbegin());
      REQUIRE(at.size() == b.hi - b.lo + 1);
      for (Id y = 0; y < r.size(); ++y) {
        if (x == y) continue;
        if (r.comparable(x, y)) {
          REQUIRE_THROWS_AS(possible_ranks(r, x, y), ComparableError);
          continue;
        }
        Interval iv = possible_ranks(r, x, y);
        REQUIRE(iv.lo == 1 + (r.ancestors(x) | r.ancestors(y)).count());
        REQUIRE(iv.hi == r.size() - (r.descendants(x) | r.descendants(y)).count());
        REQUIRE(iv.hi > iv.lo);
        for (std::size_t p = iv.lo; p <= iv.hi; ++p)
          for (std::size_t q = iv.lo; q <= iv.hi; ++q) {
            if (p == q) continue;
            IdSequence w = rank_witness(r, x, y, p, q);
            REQUIRE(oracle::is_extension(r, w));
            REQUIRE(w[p - 1] == x);
            REQUIRE(w[q - 1] == y);
          }
      }
    }
  }
  PoRelation c = PoRelation::from_pairs(1, {{1}, {2}}, {});
  CHECK_THROWS_AS(rank_witness(c, 0, 1, 1, 1), RankError);
  CHECK_THROWS_AS(rank_witness(c, 0, 1, 3, 4), RankError);
}

TEST_CASE("width and chain partitions") {
  gen::Rng rng(3);
  for (int round = 0; round < 400; ++round) {
    PoRelation r = round % 2 ? gen::random_poset(rng, gen::uniform(rng, 0, 8), 0.25)
                             : gen::random_width(rng, gen::uniform(rng, 1, 8), gen::uniform(rng, 1, 3), 0.2);
    WidthResult w = width_and_chain_partition(r);
    REQUIRE(w.width == oracle::max_antichain(r));
    REQUIRE(w.partition.chains.size() == w.width);
    std::vector<int> seen(r.size(), 0);
    for (const auto& c : w.partition.chains) {
      REQUIRE(is_chain(r, c));
      for (std::size_t i = 0; i + 1 < c.size(); ++i) REQUIRE(r.less(c[i], c[i + 1]));
      for (Id x : c) seen[x]++;
    }
    for (int s : seen) REQUIRE(s == 1);
    auto need = chain_needs(r, w.partition);
    for (Id x = 0; x < r.size(); ++x)
      for (std::size_t j = 0; j < w.partition.chains.size(); ++j) {
        std::uint32_t cnt = 0;
        for (Id y : w.partition.chains[j]) cnt += r.less(y, x);
        REQUIRE(need[x][j] == cnt);
      }
  }
}

TEST_CASE("ia-partition is minimal and definitional") {
  gen::Rng rng(8);
  for (int round = 0; round < 400; ++round) {
    PoRelation r = round % 2 ? gen::random_poset(rng, gen::uniform(rng, 0, 7), 0.3)
                             : gen::random_ia(rng, gen::uniform(rng, 1, 7), gen::uniform(rng, 1, 4), 0.5);
    IaPartition p = ia_partition(r);
    std::vector<int> seen(r.size(), 0);
    for (const auto& c : p.classes) {
      REQUIRE(is_antichain(r, c));
      REQUIRE(is_indistinguishable(r, c));
      REQUIRE(oracle::class_ok(r, c));
      REQUIRE(std::is_sorted(c.begin(), c.end()));
      for (Id x : c) seen[x]++;
    }
    for (int s : seen) REQUIRE(s == 1);
    REQUIRE(p.classes.size() == oracle::min_ia_partition(r));
    REQUIRE(ia_width(r) == p.classes.size());
  }
}

TEST_CASE("restrict and relabel keep the induced order") {
  PoRelation r = PoRelation::from_pairs(1, {{1}, {2}, {3}}, {{0, 1}, {1, 2}});
  PoRelation s = r.restrict({0, 2});
  CHECK(s.size() == 2);
  CHECK(s.less(0, 1));
  PoRelation t = r.relabel(2, {{1, 1}, {2, 2}, {3, 3}});
  CHECK(t.arity() == 2);
  CHECK(t.less(0, 2));
  CHECK(r.is_total());
  CHECK_FALSE(r.has_duplicates());
}
