#include <doctest.h>

#include <atomic>
#include <mutex>
#include <set>

#include "brute.hpp"
#include "splitex/canon.hpp"
#include "splitex/enumerate.hpp"
#include "splitex/errors.hpp"
#include "splitex/oracles.hpp"

using namespace splitex;

namespace {

bool triangle_free(const Graph& g, int) { return !contains_clique(g, 3); }

}  // namespace

TEST_CASE("graph counts") {
  const long all[] = {1, 2, 4, 11, 34, 156, 1044, 12346};
  for (int n = 1; n <= 8; ++n) CHECK(enumerate(n, {}, [](const Graph&) {}) == all[n - 1]);
  const long tf[] = {1, 2, 3, 7, 14, 38, 107, 410, 1897};
  for (int n = 1; n <= 9; ++n) CHECK(enumerate(n, triangle_free, [](const Graph&) {}) == tf[n - 1]);
}

TEST_CASE("counts agree with brute-force classification") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(enumerate(n, {}, [](const Graph&) {}) == brute::class_count(n));
    auto no_triangle = [](const Graph& g) { return !contains_clique(g, 3); };
    CHECK(enumerate(n, triangle_free, [](const Graph&) {}) == brute::class_count(n, no_triangle));
  }
}

TEST_CASE("visited graphs are pairwise non-isomorphic") {
  std::set<std::string> seen;
  long visits = 0;
  enumerate(7, {}, [&](const Graph& g) {
    ++visits;
    CHECK(g.order() == 7);
    seen.insert(canonical_graph6(g));
  });
  CHECK(static_cast<long>(seen.size()) == visits);
}

TEST_CASE("parallel enumeration visits the same classes") {
  std::set<std::string> serial;
  enumerate(7, triangle_free, [&](const Graph& g) { serial.insert(canonical_graph6(g)); });
  std::mutex m;
  std::set<std::string> parallel;
  std::atomic<int> max_worker{0};
  const long count = enumerate_parallel(
      7, triangle_free,
      [&](const Graph& g, int worker) {
        std::lock_guard lock(m);
        parallel.insert(canonical_graph6(g));
        max_worker = std::max(max_worker.load(), worker);
      },
      EnumerateOptions{10, 3});
  CHECK(count == static_cast<long>(serial.size()));
  CHECK(parallel == serial);
  CHECK(max_worker < 3);
}

TEST_CASE("limits") {
  CHECK_THROWS_AS(enumerate(0, {}, [](const Graph&) {}), DomainError);
  CHECK_THROWS_AS(enumerate(11, {}, [](const Graph&) {}), CapacityError);
  CHECK_THROWS_AS(enumerate(12, {}, [](const Graph&) {}, EnumerateOptions{20, 1}), CapacityError);
  CHECK_THROWS_AS(enumerate(6, {}, [](const Graph&) {}, EnumerateOptions{5, 1}), CapacityError);
  CHECK_THROWS_AS(enumerate_parallel(
                      5, {}, [](const Graph&, int) { throw DomainError("boom"); }, EnumerateOptions{10, 2}),
                  DomainError);
}
