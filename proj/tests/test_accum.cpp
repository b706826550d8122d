#include <memory>

#include "doctest.h"
#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "ordlattice/accum_results.hpp"
#include "ordlattice/accumulator.hpp"
#include "ordlattice/dfa.hpp"
#include "ordlattice/errors.hpp"
#include "ordlattice/eval.hpp"

using namespace ordlattice;
using fixtures::list_of;

namespace {

// Small finite monoids given by tables; the unit is 0 throughout.
std::vector<std::shared_ptr<const TableMonoid>> table_monoids() {
  std::vector<std::vector<std::size_t>> z4(4, std::vector<std::size_t>(4));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) z4[a][b] = (a + b) % 4;
  // Unit plus a left-zero band: x*y = x for x, y != 0.
  std::vector<std::vector<std::size_t>> band = {{0, 1, 2, 3}, {1, 1, 1, 1}, {2, 2, 2, 2}, {3, 3, 3, 3}};
  // Unit plus {1,2,3} under max: idempotent, commutative, not cancellative.
  std::vector<std::vector<std::size_t>> mx(4, std::vector<std::size_t>(4));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) mx[a][b] = std::max(a, b);
  return {std::make_shared<TableMonoid>("z4", z4, 0), std::make_shared<TableMonoid>("band", band, 0),
          std::make_shared<TableMonoid>("max", mx, 0)};
}

Accumulator table_accumulator(std::shared_ptr<const TableMonoid> m, bool invariant, std::uint64_t salt) {
  auto h = [invariant, salt](const Tuple& t, std::size_t p) {
    std::uint64_t v = t.at(1).natural();
    std::uint64_t x = invariant ? v * 7 + salt : v * 7 + p * 3 + salt;
    return Element{Value(x % 4)};
  };
  return Accumulator("table", m, h, invariant, 1);
}

Dfa random_dfa(gen::Rng& rng) {
  Dfa d;
  d.states = gen::uniform(rng, 2, 3);
  d.initial = 0;
  d.accepting = {0};
  for (const char* sym : {"0", "1", "2"}) {
    std::vector<std::size_t> row;
    for (std::size_t s = 0; s < d.states; ++s) row.push_back(gen::uniform(rng, 0, d.states - 1));
    d.transitions[sym] = row;
  }
  return d;
}

std::set<Element> keys(const ResultWitnesses& w) {
  std::set<Element> out;
  for (const auto& [k, v] : w) out.insert(k);
  return out;
}

void check_witnesses(const Accumulator& acc, const PoRelation& r, const ResultWitnesses& w) {
  for (const auto& [value, seq] : w) {
    REQUIRE(oracle::is_extension(r, seq));
    REQUIRE(oracle::fold(acc, oracle::world(r, seq)) == value);
  }
}

}  // namespace

TEST_CASE("table monoids are validated") {
  CHECK_THROWS_AS(TableMonoid("bad", {{0, 1}, {1, 1}}, 1), ArgumentError);
  CHECK_THROWS_AS(TableMonoid("nonassoc", {{0, 1, 2}, {1, 2, 0}, {2, 2, 2}}, 0), ArgumentError);
  for (const auto& m : table_monoids()) CHECK(m->is_cancellative() == check_cancellative(*m));
  CHECK(table_monoids()[0]->is_cancellative());
  CHECK_FALSE(table_monoids()[1]->is_cancellative());
}

TEST_CASE("built-in accumulators on lists") {
  ListRelation abc = list_of({{"a"}, {"b"}, {"c"}});
  CHECK(decode_list(make_concat().accumulate(abc)) == abc);
  CHECK(decode_list(make_topk(2).accumulate(abc)) == list_of({{"a"}, {"b"}}));
  CHECK(decode_list(make_select_at(3).accumulate(abc)) == list_of({{"c"}}));
  CHECK(decode_list(make_select_at(4).accumulate(abc)).empty());
  CHECK(make_sum(1).accumulate(list_of({{3}, {5}})) == Element{Value(8)});
  CHECK(make_count().accumulate(abc) == Element{Value(3)});
  CHECK(make_parity().accumulate(abc) == Element{Value(1)});
  CHECK_THROWS_AS(make_sum(1).accumulate(abc), ArgumentError);
  CHECK_THROWS_AS(table_accumulator(table_monoids()[0], true, 0).accumulate(list_of({{1, 2}})), ArityError);
  ListRelation big = list_of({{Value(std::uint64_t{1} << 63)}, {Value(std::uint64_t{1} << 63)}});
  CHECK_THROWS_AS(make_sum(1).accumulate(big), OverflowError);
  for (const auto& acc : {make_concat(), make_sum(1), make_count(), make_topk(2)})
    CHECK(acc.accumulate(ListRelation{}) == acc.monoid().neutral());

  Accumulator prec = make_precedes({"a"}, {"c"});
  CHECK(prec.monoid().format(prec.accumulate(abc)) == "top");
  CHECK(prec.monoid().format(prec.accumulate(list_of({{"c"}, {"a"}}))) == "bot");
  CHECK(prec.monoid().format(prec.accumulate(list_of({{"b"}}))) == "eps");
}

TEST_CASE("precedence monoid table") {
  PrecedenceMonoid m;
  Element eps{Value(PrecedenceMonoid::kEps)}, top{Value(PrecedenceMonoid::kTop)},
      bot{Value(PrecedenceMonoid::kBot)};
  CHECK(m.combine(top, top) == top);
  CHECK(m.combine(top, bot) == top);
  CHECK(m.combine(bot, bot) == bot);
  CHECK(m.combine(bot, top) == bot);
  for (const auto& x : m.elements()) {
    CHECK(m.combine(eps, x) == x);
    CHECK(m.combine(x, eps) == x);
  }
  CHECK(m.parse("bot") == bot);
  CHECK_THROWS_AS(m.parse("nope"), ParseError);
}

TEST_CASE("list encoding round-trips") {
  ListRelation l = list_of({{"a", 1}, {}, {2}});
  CHECK(decode_list(encode_list(l)) == l);
  ConcatMonoid m;
  CHECK(m.combine(encode_list(list_of({{1}})), encode_list(list_of({{2}}))) == encode_list(list_of({{1}, {2}})));
  CHECK(m.parse(m.format(encode_list(l))) == encode_list(l));
}

TEST_CASE("automaton accumulation") {
  Dfa d = load_dfa(std::string(ORDLATTICE_TEST_DATA) + "/parity.dfa.json");
  Accumulator acc = make_dfa(d);
  const auto& tm = dynamic_cast<const TransitionMonoid&>(acc.monoid());
  CHECK(tm.elements().size() == 2);
  CHECK(tm.is_cancellative());
  ListRelation aa = list_of({{"a"}, {"b"}, {"a"}});
  Element v = acc.accumulate(aa);
  CHECK(v == function_element({0, 1}));
  CHECK(d.accepts({0, 1}));
  CHECK_THROWS_AS(parse_dfa("{\"states\": 2, \"initial\": 5, \"accepting\": [], \"transitions\": {}}"), Error);
  CHECK_THROWS_AS(parse_dfa("{oops"), ParseError);

  gen::Rng rng(71);
  for (int round = 0; round < 60; ++round) {
    Dfa rd = random_dfa(rng);
    Accumulator ra = make_dfa(rd);
    ListRelation l;
    for (std::size_t i = 0, n = gen::uniform(rng, 0, 6); i < n; ++i) l.rows.push_back(gen::random_tuple(rng, 1, 3));
    // Run the automaton from every start state by hand.
    std::vector<std::size_t> f;
    for (std::size_t s = 0; s < rd.states; ++s) {
      std::size_t cur = s;
      for (const auto& t : l.rows) cur = rd.transitions.at(t.at(1).text())[cur];
      f.push_back(cur);
    }
    REQUIRE(ra.accumulate(l) == function_element(f));
  }
}

TEST_CASE("brute-force results match per-world folding") {
  gen::Rng rng(73);
  for (int round = 0; round < 200; ++round) {
    PoRelation r = gen::random_poset(rng, gen::uniform(rng, 0, 7), 0.3, 1, 3);
    std::vector<Accumulator> accs = {make_concat(), make_sum(1), make_topk(2), make_precedes({0}, {1}),
                                     make_dfa(random_dfa(rng))};
    for (const auto& acc : accs) {
      auto w = results_bruteforce(acc, r);
      REQUIRE(keys(w) == oracle::accum_values(acc, r));
      check_witnesses(acc, r, w);
    }
  }
  CHECK(keys(results_bruteforce(make_concat(), PoRelation(1))) == std::set<Element>{Element{}});
  PoRelation anti = PoRelation::from_pairs(1, {{1}, {2}, {3}, {4}}, {});
  CHECK_THROWS_AS(results_bruteforce(make_concat(), anti, 5), OverflowError);
}

TEST_CASE("direct-product worlds through concatenation") {
  Query query = q::dirprod(q::rel("Rest"),
                           q::select(Predicate::neq(Operand::attr(2), Operand::value(Value(12))), q::rel("Hotel")));
  PoRelation r = eval(query, fixtures::paris());
  std::set<ListRelation> got;
  for (const auto& [v, seq] : results_bruteforce(make_concat(), r)) got.insert(decode_list(v));
  std::set<ListRelation> expected = {
      list_of({{"G", 8, "M", 5}, {"G", 8, "B", 8}, {"TA", 5, "M", 5}, {"TA", 5, "B", 8}}),
      list_of({{"G", 8, "M", 5}, {"TA", 5, "M", 5}, {"G", 8, "B", 8}, {"TA", 5, "B", 8}}),
  };
  CHECK(got == expected);
}

TEST_CASE("bounded-width DP equals brute force") {
  gen::Rng rng(79);
  auto monoids = table_monoids();
  int cases = 0;
  for (int round = 0; round < 320; ++round) {
    std::size_t n = gen::uniform(rng, 0, 10);
    PoRelation r = gen::random_width(rng, n, gen::uniform(rng, 1, 3), 0.15, 1, 4);
    std::vector<Accumulator> accs = {make_parity(), make_precedes({0}, {1}), make_dfa(random_dfa(rng))};
    for (const auto& m : monoids) accs.push_back(table_accumulator(m, gen::coin(rng, 0.5), round));
    for (const auto& acc : accs) {
      auto dp = results_bounded_width(acc, r);
      REQUIRE(keys(dp) == keys(results_bruteforce(acc, r)));
      check_witnesses(acc, r, dp);
      ++cases;
    }
  }
  CHECK(cases >= 300);
  CHECK_THROWS_AS(results_bounded_width(make_sum(1), PoRelation(1)), NotFiniteError);

  // Two parallel chains of five under parity.
  std::vector<Tuple> labels;
  std::vector<IdPair> pairs;
  for (Id i = 0; i < 10; ++i) {
    labels.push_back({i % 3});
    if (i % 5 != 4) pairs.push_back({i, i + 1});
  }
  PoRelation two = PoRelation::from_pairs(1, labels, pairs);
  Accumulator alt = table_accumulator(monoids[1], false, 1);
  CHECK(keys(results_bounded_width(alt, two)) == oracle::accum_values(alt, two));
}

TEST_CASE("union DP equals brute force") {
  gen::Rng rng(83);
  auto monoids = table_monoids();
  int cases = 0;
  for (int round = 0; round < 320; ++round) {
    PoRelation rw = gen::random_width(rng, gen::uniform(rng, 0, 5), 2, 0.2, 1, 3);
    PoRelation ria = gen::random_ia(rng, gen::uniform(rng, 0, 5), gen::uniform(rng, 1, 2), 0.5, 1, 3);
    std::size_t total = rw.size() + ria.size();
    if (total > 9) ria = ria.restrict({});
    PoRelation all = unite(rw, ria);
    std::vector<Accumulator> accs = {make_parity(), make_precedes({0}, {1}), make_dfa(random_dfa(rng))};
    for (const auto& m : monoids) accs.push_back(table_accumulator(m, true, round));
    for (const auto& acc : accs) {
      auto got = results_noprod_union(acc, rw, ria);
      REQUIRE(keys(got) == oracle::accum_values(acc, all));
      check_witnesses(acc, all, got);
      ++cases;
    }
  }
  CHECK(cases >= 300);
  CHECK_THROWS_AS(results_noprod_union(table_accumulator(monoids[0], false, 0), PoRelation(1), PoRelation(1)),
                  NotPositionInvariantError);
  CHECK_THROWS_AS(results_noprod_union(make_count(), PoRelation(1), PoRelation(1)), NotFiniteError);
}

TEST_CASE("order-insensitive accumulation has one result") {
  gen::Rng rng(89);
  for (int round = 0; round < 100; ++round) {
    PoRelation r = gen::random_poset(rng, gen::uniform(rng, 0, 7), 0.2, 1, 4);
    CHECK(results_bruteforce(make_sum(1), r).size() == 1);
    CHECK(results_bruteforce(make_parity(), r).size() == 1);
    CHECK(results_bounded_width(table_accumulator(table_monoids()[2], true, 3), r).size() == 1);
  }
}

TEST_CASE("group-by results") {
  GroupByAccumulator g{make_concat(), {1}};
  // Two incomparable tuples in different groups: one result.
  PoRelation r = PoRelation::from_pairs(2, {{"x", 1}, {"y", 2}}, {});
  CHECK(group_by_results(g, r).size() == 1);

  gen::Rng rng(97);
  for (int round = 0; round < 200; ++round) {
    PoRelation rel = gen::random_poset(rng, gen::uniform(rng, 0, 7), 0.3, 2, 2);
    std::vector<Accumulator> accs = {make_concat(), make_sum(2), make_precedes({0, 0}, {0, 1})};
    for (const auto& acc : accs) {
      GroupByAccumulator ga{acc, {1}};
      std::set<GroupResult> expected;
      for (const auto& l : oracle::worlds(rel)) expected.insert(oracle::group_fold(acc, {1}, l));
      REQUIRE(group_by_results(ga, rel) == expected);
    }
  }
}
