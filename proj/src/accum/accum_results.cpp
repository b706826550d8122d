#include "ordlattice/accum_results.hpp"

#include <algorithm>
#include <unordered_set>

#include "ordlattice/errors.hpp"
#include "ordlattice/partitions.hpp"

namespace ordlattice {

namespace {

struct StateHash {
  std::size_t operator()(const std::pair<Bitset, Element>& s) const {
    return s.first.hash() * 1000003u ^ ElementHash{}(s.second);
  }
};

void check_cap(const PoRelation& r, std::size_t cap) {
  if (r.size() > cap)
    throw ResourceExceeded("exhaustive search over " + std::to_string(r.size()) +
                           " elements exceeds the cap of " + std::to_string(cap));
}

bool twins(const PoRelation& r, Id a, Id b) {
  return r.label(a) == r.label(b) && r.ancestors(a) == r.ancestors(b) &&
         r.descendants(a) == r.descendants(b);
}

struct ValueSearch {
  const Accumulator& acc;
  const PoRelation& r;
  const std::function<bool(const Element&, const IdSequence&)>& stop;
  std::unordered_set<std::pair<Bitset, Element>, StateHash> seen;
  Bitset used;
  std::vector<std::size_t> pending;
  IdSequence prefix;

  bool run(const Element& value) {
    if (prefix.size() == r.size()) return stop(value, prefix);
    if (!seen.insert({used, value}).second) return false;
    std::vector<Id> tried;
    for (Id x = 0; x < r.size(); ++x) {
      if (used.test(x) || pending[x]) continue;
      if (std::any_of(tried.begin(), tried.end(), [&](Id t) { return twins(r, t, x); })) continue;
      tried.push_back(x);
      Element next = acc.monoid().combine(value, acc.map(r.label(x), prefix.size() + 1));
      used.set(x);
      prefix.push_back(x);
      r.descendants(x).for_each([&](Id d) { --pending[d]; });
      bool done = run(next);
      r.descendants(x).for_each([&](Id d) { ++pending[d]; });
      prefix.pop_back();
      used.reset(x);
      if (done) return true;
    }
    return false;
  }
};

}  // namespace

bool search_results(const Accumulator& acc, const PoRelation& r, std::size_t element_cap,
                    const std::function<bool(const Element&, const IdSequence&)>& stop) {
  if (r.failed()) return false;
  check_cap(r, element_cap);
  ValueSearch s{acc, r, stop, {}, Bitset(r.size()), std::vector<std::size_t>(r.size()), {}};
  for (Id i = 0; i < r.size(); ++i) s.pending[i] = r.ancestors(i).count();
  return s.run(acc.monoid().neutral());
}

ResultWitnesses results_bruteforce(const Accumulator& acc, const PoRelation& r, std::size_t limit,
                                   std::size_t element_cap) {
  ResultWitnesses out;
  search_results(acc, r, element_cap, [&](const Element& v, const IdSequence& w) {
    out.emplace(v, w);
    if (out.size() > limit)
      throw OverflowError("more than " + std::to_string(limit) + " accumulation results");
    return false;
  });
  return out;
}

namespace {

// Layered search shared by the two DPs. A state is a vector of counters plus
// the accumulated value; each layer adds one element.
using Key = std::pair<std::vector<std::uint32_t>, Element>;

struct Node {
  Key key;
  std::size_t parent;
  std::size_t move;  // meaning defined by the caller
};

template <class Expand>
std::vector<std::vector<Node>> layered(std::size_t layers, Key start, Expand expand) {
  std::vector<std::vector<Node>> levels(1);
  levels[0].push_back({std::move(start), 0, 0});
  for (std::size_t s = 0; s < layers; ++s) {
    std::map<Key, std::size_t> index;
    std::vector<Node> next;
    for (std::size_t i = 0; i < levels[s].size(); ++i)
      expand(levels[s][i].key, s, [&](Key k, std::size_t move) {
        if (index.emplace(k, next.size()).second) next.push_back({std::move(k), i, move});
      });
    levels.push_back(std::move(next));
  }
  return levels;
}

std::vector<std::size_t> moves_to(const std::vector<std::vector<Node>>& levels, std::size_t end) {
  std::vector<std::size_t> moves(levels.size() - 1);
  std::size_t i = end;
  for (std::size_t s = levels.size() - 1; s > 0; --s) {
    moves[s - 1] = levels[s][i].move;
    i = levels[s][i].parent;
  }
  return moves;
}

struct ChainIndex {
  std::vector<std::vector<Id>> chains;
  // need[x][j]: how many elements of chain j lie below x.
  std::vector<std::vector<std::uint32_t>> need;

  explicit ChainIndex(const PoRelation& r) {
    ChainPartition p = width_and_chain_partition(r).partition;
    need = chain_needs(r, p);
    chains = std::move(p.chains);
  }

  bool addable(Id x, const std::vector<std::uint32_t>& m) const {
    for (std::size_t j = 0; j < chains.size(); ++j)
      if (m[j] < need[x][j]) return false;
    return true;
  }
};

void require_finite(const Accumulator& acc) {
  if (!acc.monoid().is_finite())
    throw NotFiniteError("monoid " + acc.monoid().name() + " is not finite");
}

}  // namespace

ResultWitnesses results_bounded_width(const Accumulator& acc, const PoRelation& r) {
  require_finite(acc);
  if (r.failed()) return {};
  ChainIndex ci(r);
  const std::size_t w = ci.chains.size();
  auto levels = layered(r.size(), Key{std::vector<std::uint32_t>(w, 0), acc.monoid().neutral()},
                        [&](const Key& k, std::size_t s, auto&& emit) {
                          for (std::size_t j = 0; j < w; ++j) {
                            if (k.first[j] == ci.chains[j].size()) continue;
                            Id x = ci.chains[j][k.first[j]];
                            if (!ci.addable(x, k.first)) continue;
                            Key next = k;
                            ++next.first[j];
                            next.second = acc.monoid().combine(k.second, acc.map(r.label(x), s + 1));
                            emit(std::move(next), x);
                          }
                        });
  ResultWitnesses out;
  for (std::size_t i = 0; i < levels.back().size(); ++i)
    out.emplace(levels.back()[i].key.second, moves_to(levels, i));
  return out;
}

ResultWitnesses results_noprod_union(const Accumulator& acc, const PoRelation& r_width,
                                     const PoRelation& r_ia) {
  require_finite(acc);
  if (!acc.is_position_invariant())
    throw NotPositionInvariantError("accumulation map of " + acc.name() + " depends on positions");
  if (r_width.failed() || r_ia.failed()) return {};
  ChainIndex ci(r_width);
  const std::size_t w = ci.chains.size();
  const auto classes = ia_partition(r_ia).classes;
  const std::size_t c = classes.size();

  // Per class: the distinct h-values ("slots"), their multiplicities, and
  // the classes lying below it.
  std::vector<std::vector<Element>> slot_value(c);
  std::vector<std::vector<std::uint32_t>> slot_count(c);
  std::vector<std::size_t> slot_base(c, 0);
  std::vector<std::vector<std::size_t>> below(c);
  std::vector<std::size_t> class_of(r_ia.size());
  for (std::size_t k = 0; k < c; ++k)
    for (Id x : classes[k]) class_of[x] = k;
  std::size_t slots = 0;
  for (std::size_t k = 0; k < c; ++k) {
    slot_base[k] = w + slots;
    for (Id x : classes[k]) {
      Element v = acc.map(r_ia.label(x), 1);
      auto it = std::find(slot_value[k].begin(), slot_value[k].end(), v);
      if (it == slot_value[k].end()) {
        slot_value[k].push_back(v);
        slot_count[k].push_back(1);
      } else {
        ++slot_count[k][static_cast<std::size_t>(it - slot_value[k].begin())];
      }
    }
    slots += slot_value[k].size();
    std::set<std::size_t> under;
    r_ia.ancestors(classes[k].front()).for_each([&](Id a) { under.insert(class_of[a]); });
    below[k].assign(under.begin(), under.end());
  }

  auto used_in = [&](const std::vector<std::uint32_t>& m, std::size_t k) {
    std::uint32_t u = 0;
    for (std::size_t s = 0; s < slot_value[k].size(); ++s) u += m[slot_base[k] + s];
    return u;
  };
  // Moves below r_width.size() name a chain element; the others encode
  // (class, slot) as offset + slot index.
  const std::size_t offset = r_width.size();
  std::vector<std::pair<std::size_t, std::size_t>> slot_of_move;
  for (std::size_t k = 0; k < c; ++k)
    for (std::size_t s = 0; s < slot_value[k].size(); ++s) slot_of_move.push_back({k, s});

  auto levels = layered(
      r_width.size() + r_ia.size(), Key{std::vector<std::uint32_t>(w + slots, 0), acc.monoid().neutral()},
      [&](const Key& key, std::size_t, auto&& emit) {
        const auto& m = key.first;
        for (std::size_t j = 0; j < w; ++j) {
          if (m[j] == ci.chains[j].size()) continue;
          Id x = ci.chains[j][m[j]];
          if (!ci.addable(x, m)) continue;
          Key next = key;
          ++next.first[j];
          next.second = acc.monoid().combine(key.second, acc.map(r_width.label(x), 1));
          emit(std::move(next), x);
        }
        std::size_t move = offset;
        for (std::size_t k = 0; k < c; ++k) {
          bool open = std::all_of(below[k].begin(), below[k].end(),
                                  [&](std::size_t b) { return used_in(m, b) == classes[b].size(); });
          for (std::size_t s = 0; s < slot_value[k].size(); ++s, ++move) {
            if (!open || m[slot_base[k] + s] == slot_count[k][s]) continue;
            Key next = key;
            ++next.first[slot_base[k] + s];
            next.second = acc.monoid().combine(key.second, slot_value[k][s]);
            emit(std::move(next), move);
          }
        }
      });

  ResultWitnesses out;
  for (std::size_t i = 0; i < levels.back().size(); ++i) {
    if (out.count(levels.back()[i].key.second)) continue;
    std::vector<char> taken(r_ia.size(), 0);
    IdSequence witness;
    for (std::size_t mv : moves_to(levels, i)) {
      if (mv < offset) {
        witness.push_back(mv);
        continue;
      }
      auto [k, s] = slot_of_move[mv - offset];
      for (Id x : classes[k])
        if (!taken[x] && acc.map(r_ia.label(x), 1) == slot_value[k][s]) {
          taken[x] = 1;
          witness.push_back(offset + x);
          break;
        }
    }
    out.emplace(levels.back()[i].key.second, std::move(witness));
  }
  return out;
}

Tuple group_key(const Tuple& t, const std::vector<std::size_t>& attrs) {
  Tuple k;
  for (std::size_t a : attrs) {
    if (a < 1 || a > t.arity()) throw ArityError("group-by position ." + std::to_string(a) + " out of range");
    k.values.push_back(t.at(a));
  }
  return k;
}

GroupResult accumulate_groups(const GroupByAccumulator& g, const ListRelation& l) {
  std::map<Tuple, std::pair<Element, std::size_t>> acc;
  for (const auto& t : l.rows) {
    Tuple k = group_key(t, g.attrs);
    auto it = acc.find(k);
    if (it == acc.end()) it = acc.emplace(k, std::make_pair(g.acc.monoid().neutral(), 0)).first;
    auto& [value, count] = it->second;
    value = g.acc.monoid().combine(value, g.acc.map(t, ++count));
  }
  GroupResult out;
  for (auto& [k, vc] : acc) out.push_back({k, vc.first});
  return out;
}

namespace {

struct GroupSearch {
  const GroupByAccumulator& g;
  const PoRelation& r;
  std::size_t limit;
  std::vector<std::size_t> group;           // group index per id
  std::vector<Tuple> keys;                  // sorted group keys
  std::vector<std::size_t> placed;          // used ids per group
  std::vector<Element> values;
  std::vector<std::size_t> pending;
  Bitset used;
  std::size_t depth = 0;
  std::set<std::pair<Bitset, std::vector<Element>>> seen;
  std::set<GroupResult> out;

  void run() {
    if (depth == r.size()) {
      GroupResult res;
      for (std::size_t k = 0; k < keys.size(); ++k) res.push_back({keys[k], values[k]});
      out.insert(std::move(res));
      if (out.size() > limit)
        throw OverflowError("more than " + std::to_string(limit) + " group-by results");
      return;
    }
    if (!seen.insert({used, values}).second) return;
    std::vector<Id> tried;
    for (Id x = 0; x < r.size(); ++x) {
      if (used.test(x) || pending[x]) continue;
      if (std::any_of(tried.begin(), tried.end(), [&](Id t) { return twins(r, t, x); })) continue;
      tried.push_back(x);
      std::size_t k = group[x];
      Element saved = values[k];
      values[k] = g.acc.monoid().combine(saved, g.acc.map(r.label(x), ++placed[k]));
      used.set(x);
      ++depth;
      r.descendants(x).for_each([&](Id d) { --pending[d]; });
      run();
      r.descendants(x).for_each([&](Id d) { ++pending[d]; });
      --depth;
      used.reset(x);
      --placed[k];
      values[k] = std::move(saved);
    }
  }
};

}  // namespace

std::set<GroupResult> group_by_results(const GroupByAccumulator& g, const PoRelation& r,
                                       std::size_t limit, std::size_t element_cap) {
  if (r.failed()) return {};
  check_cap(r, element_cap);
  GroupSearch s{g, r, limit, {}, {}, {}, {}, std::vector<std::size_t>(r.size()), Bitset(r.size()), 0, {}, {}};
  std::map<Tuple, std::size_t> index;
  for (const auto& t : r.labels()) index.emplace(group_key(t, g.attrs), 0);
  for (auto& [k, i] : index) {
    i = s.keys.size();
    s.keys.push_back(k);
  }
  for (Id x = 0; x < r.size(); ++x) {
    s.group.push_back(index.at(group_key(r.label(x), g.attrs)));
    s.pending[x] = r.ancestors(x).count();
  }
  s.placed.assign(s.keys.size(), 0);
  s.values.assign(s.keys.size(), g.acc.monoid().neutral());
  s.run();
  return std::move(s.out);
}

}  // namespace ordlattice
