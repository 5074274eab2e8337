#include "splitex/enumerate.hpp"

#include <atomic>
#include <bit>
#include <exception>
#include <optional>
#include <thread>

#include "splitex/canon.hpp"
#include "splitex/canon_detail.hpp"
#include "splitex/errors.hpp"

namespace splitex {

namespace {

struct Node {
  Graph graph;
  std::vector<Permutation> generators;
};

class Generator {
 public:
  Generator(int n, const Admissible& keep) : n_(n), keep_(keep) {}

  std::optional<Node> root() const {
    Graph k1;
    if (keep_ && !keep_(k1, 0)) return std::nullopt;
    return Node{k1, {}};
  }

  // Children of `parent` whose canonical parent is `parent`. Generators are
  // computed only when the children will be extended further.
  template <class F>
  void children(const Node& parent, F&& emit) const {
    const Graph& g = parent.graph;
    const int k = g.order();
    const bool need_generators = k + 1 < n_;
    const std::uint64_t subsets = std::uint64_t{1} << k;
    std::vector<bool> seen(subsets, false);
    std::vector<std::uint64_t> queue;

    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
      if (seen[mask]) continue;
      // Mark the orbit of mask under Aut(parent).
      seen[mask] = true;
      queue.assign(1, mask);
      for (std::size_t head = 0; head < queue.size(); ++head) {
        for (const Permutation& gamma : parent.generators) {
          std::uint64_t image = 0;
          for (std::uint64_t rest = queue[head]; rest; rest &= rest - 1)
            image |= std::uint64_t{1} << gamma[static_cast<std::size_t>(std::countr_zero(rest))];
          if (!seen[image]) {
            seen[image] = true;
            queue.push_back(image);
          }
        }
      }

      const int deg = std::popcount(mask);
      bool max_degree = true;
      for (int w = 0; w < k && max_degree; ++w)
        max_degree = g.degree(w) + static_cast<int>((mask >> w) & 1) <= deg;
      if (!max_degree) continue;

      Graph child = g.with_vertex(VertexSet(mask));
      if (keep_ && !keep_(child, k)) continue;

      detail::Cells cells{child.vertices().bits()};
      detail::refine(child, cells);
      const std::uint64_t last = cells.back();
      if (!((last >> k) & 1)) continue;

      if (last == (std::uint64_t{1} << k)) {
        if (need_generators) {
          emit(Node{child, canonical_form(child).generators});
        } else {
          emit(Node{std::move(child), {}});
        }
        continue;
      }
      CanonicalForm cf = canonical_form(child);
      int m = -1;
      for (int v : VertexSet(last))
        if (m < 0 || cf.label[static_cast<std::size_t>(v)] > cf.label[static_cast<std::size_t>(m)]) m = v;
      if (cf.orbits[static_cast<std::size_t>(k)] != cf.orbits[static_cast<std::size_t>(m)]) continue;
      emit(Node{std::move(child), need_generators ? std::move(cf.generators) : std::vector<Permutation>{}});
    }
  }

  template <class V>
  long expand(const Node& node, V&& visit) const {
    if (node.graph.order() == n_) {
      visit(node.graph);
      return 1;
    }
    long count = 0;
    children(node, [&](Node child) { count += expand(child, visit); });
    return count;
  }

  int order() const { return n_; }

 private:
  int n_;
  const Admissible& keep_;
};

void check_order(int n, const EnumerateOptions& options) {
  if (n < 1) throw DomainError("enumeration needs at least one vertex");
  const int cap = std::min(options.cap, kEnumerationHardCap);
  if (n > cap) throw CapacityError("enumeration order " + std::to_string(n) + " exceeds the cap " + std::to_string(cap));
}

}  // namespace

long enumerate(int n, const Admissible& keep, const std::function<void(const Graph&)>& visit,
               const EnumerateOptions& options) {
  check_order(n, options);
  Generator gen(n, keep);
  auto root = gen.root();
  if (!root) return 0;
  return gen.expand(*root, [&](const Graph& g) {
    if (visit) visit(g);
  });
}

long enumerate_parallel(int n, const Admissible& keep, const std::function<void(const Graph&, int)>& visit,
                        const EnumerateOptions& options) {
  check_order(n, options);
  const int workers = std::max(1, options.workers);
  Generator gen(n, keep);
  auto root = gen.root();
  if (!root) return 0;
  if (workers == 1) return gen.expand(*root, [&](const Graph& g) {
      if (visit) visit(g, 0);
    });

  // Grow a frontier wide enough to balance, then hand out its subtrees.
  std::vector<Node> frontier{*root};
  const std::size_t wanted = static_cast<std::size_t>(workers) * 16;
  while (!frontier.empty() && frontier.size() < wanted && frontier.front().graph.order() < n - 1) {
    std::vector<Node> next;
    for (const Node& node : frontier) gen.children(node, [&](Node child) { next.push_back(std::move(child)); });
    frontier = std::move(next);
  }

  std::atomic<std::size_t> cursor{0};
  std::atomic<long> total{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        long local = 0;
        for (std::size_t i = cursor++; i < frontier.size() && !failed; i = cursor++)
          local += gen.expand(frontier[i], [&](const Graph& g) {
            if (visit) visit(g, w);
          });
        total += local;
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return total;
}

}  // namespace splitex
