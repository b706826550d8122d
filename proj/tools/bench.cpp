// Times the bounded-width DP against memoized backtracking on random
// relations of growing size and width. Usage: bench [seed]
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <random>

#include "ordlattice/errors.hpp"
#include "ordlattice/partitions.hpp"
#include "ordlattice/solvers.hpp"

using namespace ordlattice;

namespace {

// w chains with forward cross edges along one random global order.
PoRelation make_instance(std::mt19937_64& rng, std::size_t n, std::size_t w) {
  std::vector<std::size_t> time(n), chain(n);
  std::iota(time.begin(), time.end(), 0);
  std::shuffle(time.begin(), time.end(), rng);
  for (auto& c : chain) c = rng() % w;
  std::vector<IdPair> pairs;
  std::bernoulli_distribution cross(0.03);
  for (Id a = 0; a < n; ++a)
    for (Id b = 0; b < n; ++b)
      if (time[a] < time[b] && (chain[a] == chain[b] || cross(rng))) pairs.push_back({a, b});
  std::vector<Tuple> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back({static_cast<std::uint64_t>(rng() % 2)});
  return PoRelation::from_pairs(1, labels, pairs);
}

ListRelation some_world(std::mt19937_64& rng, const PoRelation& r) {
  std::vector<char> used(r.size(), 0);
  ListRelation l;
  for (std::size_t step = 0; step < r.size(); ++step) {
    std::vector<Id> avail;
    for (Id x = 0; x < r.size(); ++x) {
      if (used[x]) continue;
      bool ok = true;
      for (Id y = 0; y < r.size() && ok; ++y) ok = used[y] || !r.less(y, x);
      if (ok) avail.push_back(x);
    }
    Id pick = avail[rng() % avail.size()];
    used[pick] = 1;
    l.rows.push_back(r.label(pick));
  }
  return l;
}

template <class F>
double millis(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::mt19937_64 rng(argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1);
  std::printf("%5s %6s %-9s %7s %10s %13s\n", "n", "width", "candidate", "answer", "dp_ms", "backtrack_ms");
  DispatchPolicy lifted;
  lifted.brute_force_cap = 64;
  for (std::size_t w : {2, 3, 4, 6, 8}) {
    for (std::size_t n : {16, 32, 64}) {
      PoRelation r = make_instance(rng, n, w);
      ListRelation world = some_world(rng, r);
      ListRelation shuffled = world;
      std::shuffle(shuffled.rows.begin(), shuffled.rows.end(), rng);
      for (const auto* l : {&world, &shuffled}) {
        bool answer = false;
        double dp = millis([&] { answer = poss_bounded_width_dp(r, *l).answer; });
        double bt = millis([&] { poss_backtracking(r, *l, lifted); });
        std::printf("%5zu %6zu %-9s %7s %10.2f %13.2f\n", n, width(r), l == &world ? "world" : "shuffled",
                    answer ? "yes" : "no", dp, bt);
      }
    }
  }
  return 0;
}
