#include "ordlattice/extensions.hpp"

#include <algorithm>

#include "ordlattice/errors.hpp"

namespace ordlattice {

LinearExtensionStream::LinearExtensionStream(const PoRelation& r)
    : r_(&r), pending_(r.size()), used_(r.size(), 0) {
  for (Id i = 0; i < r.size(); ++i) pending_[i] = r.ancestors(i).count();
  done_ = r.failed();
}

LinearExtensionStream linear_extensions(const PoRelation& r) { return LinearExtensionStream(r); }

void LinearExtensionStream::take(Id x) {
  used_[x] = 1;
  prefix_.push_back(x);
  r_->descendants(x).for_each([&](Id d) { --pending_[d]; });
}

void LinearExtensionStream::give_back(Id x) {
  used_[x] = 0;
  prefix_.pop_back();
  r_->descendants(x).for_each([&](Id d) { ++pending_[d]; });
}

std::optional<Id> LinearExtensionStream::first_available(Id from) const {
  for (Id i = from; i < r_->size(); ++i)
    if (!used_[i] && pending_[i] == 0) return i;
  return std::nullopt;
}

std::optional<IdSequence> LinearExtensionStream::next() {
  if (done_) return std::nullopt;
  const std::size_t n = r_->size();
  if (!started_) {
    started_ = true;
    if (n == 0) {
      done_ = true;
      return IdSequence{};
    }
  } else {
    // Backtrack to the deepest level that still has an untried candidate.
    for (;;) {
      if (prefix_.empty()) {
        done_ = true;
        return std::nullopt;
      }
      Id last = prefix_.back();
      give_back(last);
      if (auto y = first_available(last + 1)) {
        take(*y);
        break;
      }
    }
  }
  while (prefix_.size() < n) take(*first_available(0));
  return prefix_;
}

namespace {

struct WorldSearch {
  const PoRelation& r;
  std::size_t limit;
  bool truncate;  // stop quietly at `limit` instead of throwing
  WorldSet out;
  std::vector<std::size_t> pending;
  std::vector<char> used;
  std::vector<Tuple> rows;

  void run() {
    if (truncate && out.size() >= limit) return;
    if (rows.size() == r.size()) {
      out.insert(ListRelation(rows));
      if (!truncate && out.size() > limit)
        throw OverflowError("more than " + std::to_string(limit) + " possible worlds");
      return;
    }
    std::vector<Id> tried;
    for (Id x = 0; x < r.size(); ++x) {
      if (used[x] || pending[x]) continue;
      // Twins (same label and same order neighbourhood) lead to the same worlds.
      bool twin = std::any_of(tried.begin(), tried.end(), [&](Id t) {
        return r.label(t) == r.label(x) && r.ancestors(t) == r.ancestors(x) &&
               r.descendants(t) == r.descendants(x);
      });
      if (twin) continue;
      tried.push_back(x);
      used[x] = 1;
      rows.push_back(r.label(x));
      r.descendants(x).for_each([&](Id d) { --pending[d]; });
      run();
      r.descendants(x).for_each([&](Id d) { ++pending[d]; });
      rows.pop_back();
      used[x] = 0;
    }
  }
};

WorldSet search_worlds(const PoRelation& r, std::size_t limit, bool truncate) {
  if (r.failed()) return {};
  WorldSearch s{r, limit, truncate, {}, std::vector<std::size_t>(r.size()), std::vector<char>(r.size(), 0), {}};
  for (Id i = 0; i < r.size(); ++i) s.pending[i] = r.ancestors(i).count();
  s.run();
  return std::move(s.out);
}

}  // namespace

WorldSet possible_worlds(const PoRelation& r, std::size_t limit) { return search_worlds(r, limit, false); }

std::vector<ListRelation> some_worlds(const PoRelation& r, std::size_t count) {
  auto ws = search_worlds(r, count, true);
  std::vector<ListRelation> out(ws.begin(), ws.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ListRelation> sorted_worlds(const PoRelation& r, std::size_t limit) {
  auto ws = possible_worlds(r, limit);
  std::vector<ListRelation> out(ws.begin(), ws.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool is_linear_extension(const PoRelation& r, const IdSequence& seq) {
  const std::size_t n = r.size();
  if (seq.size() != n) throw NotPermutationError("sequence length differs from relation size");
  std::vector<std::size_t> pos(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (seq[i] >= n || pos[seq[i]] != n) throw NotPermutationError("sequence is not a permutation");
    pos[seq[i]] = i;
  }
  for (auto [a, b] : r.hasse())
    if (pos[a] > pos[b]) return false;
  return true;
}

IdSequence canonical_extension(const PoRelation& r) {
  auto s = linear_extensions(r);
  auto first = s.next();
  return first ? *first : IdSequence{};
}

ListRelation world_of(const PoRelation& r, const IdSequence& seq) {
  ListRelation l;
  l.rows.reserve(seq.size());
  for (Id id : seq) l.rows.push_back(r.label(id));
  return l;
}

Interval possible_ranks(const PoRelation& r, Id x, Id y) {
  if (x >= r.size() || y >= r.size()) throw ArgumentError("unknown id");
  if (x == y || r.comparable(x, y)) throw ComparableError("possible ranks need two incomparable ids");
  std::size_t a = (r.ancestors(x) | r.ancestors(y)).count();
  std::size_t d = (r.descendants(x) | r.descendants(y)).count();
  return {a + 1, r.size() - d};
}

IdSequence rank_witness(const PoRelation& r, Id x, Id y, std::size_t p, std::size_t q) {
  if (x >= r.size() || y >= r.size() || x == y || r.comparable(x, y))
    throw RankError("rank witness needs two incomparable ids");
  Interval pr = possible_ranks(r, x, y);
  if (p == q || !pr.contains(p) || !pr.contains(q))
    throw RankError("positions outside the possible ranks");
  Bitset below = r.ancestors(x) | r.ancestors(y);
  Bitset above = r.descendants(x) | r.descendants(y);
  IdSequence canon = canonical_extension(r);
  IdSequence head, middle, tail;
  for (Id id : canon) {
    if (id == x || id == y) continue;
    if (below.test(id))
      head.push_back(id);
    else if (above.test(id))
      tail.push_back(id);
    else
      middle.push_back(id);
  }
  // The canonical extension restricted to each block stays an extension of it.
  IdSequence out = head;
  std::size_t mi = 0;
  const std::size_t end = r.size() - tail.size();
  for (std::size_t pos = head.size() + 1; pos <= end; ++pos) {
    if (pos == p)
      out.push_back(x);
    else if (pos == q)
      out.push_back(y);
    else
      out.push_back(middle[mi++]);
  }
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

Interval index_bounds(const PoRelation& r, Id x) {
  if (x >= r.size()) throw ArgumentError("unknown id");
  return {r.ancestors(x).count() + 1, r.size() - r.descendants(x).count()};
}

}  // namespace ordlattice
