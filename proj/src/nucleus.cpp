#include "rabbit/nucleus.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

#include "rabbit/errors.hpp"
#include "rabbit/wreath.hpp"

namespace rabbit {

namespace {

std::array<Word, 3> restrictions(const Word& w) {
  WreathElement e = phi(w);
  return std::move(e.coords);
}

// Tarjan's strongly connected components over an adjacency list.
class SccFinder {
 public:
  explicit SccFinder(const std::vector<std::vector<std::size_t>>& adj)
      : adj_(adj), index_(adj.size(), kUnvisited), low_(adj.size()), on_stack_(adj.size()),
        component_(adj.size()) {
    for (std::size_t v = 0; v < adj_.size(); ++v) {
      if (index_[v] == kUnvisited) visit(v);
    }
  }

  const std::vector<std::size_t>& component() const { return component_; }
  std::size_t component_count() const { return components_; }

 private:
  static constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);

  void visit(std::size_t v) {
    index_[v] = low_[v] = counter_++;
    stack_.push_back(v);
    on_stack_[v] = true;
    for (std::size_t w : adj_[v]) {
      if (index_[w] == kUnvisited) {
        visit(w);
        low_[v] = std::min(low_[v], low_[w]);
      } else if (on_stack_[w]) {
        low_[v] = std::min(low_[v], index_[w]);
      }
    }
    if (low_[v] == index_[v]) {
      std::size_t w;
      do {
        w = stack_.back();
        stack_.pop_back();
        on_stack_[w] = false;
        component_[w] = components_;
      } while (w != v);
      ++components_;
    }
  }

  const std::vector<std::vector<std::size_t>>& adj_;
  std::vector<std::size_t> index_, low_;
  std::vector<bool> on_stack_;
  std::vector<std::size_t> component_;
  std::vector<std::size_t> stack_;
  std::size_t counter_ = 0;
  std::size_t components_ = 0;
};

std::set<Word> products_with(const std::set<Word>& elements) {
  std::set<Word> out = elements;
  for (const auto& a : elements) {
    for (const auto& b : elements) out.insert(a * b);
  }
  return out;
}

}  // namespace

std::vector<Word> standard_generating_set() {
  return {Word::identity(), Word::letter(Letter::x), Word::letter(Letter::x_inv),
          Word::letter(Letter::z), Word::letter(Letter::z_inv)};
}

std::set<Word> restriction_closure(const std::set<Word>& seeds, std::size_t budget) {
  std::set<Word> seen = seeds;
  std::deque<Word> queue(seeds.begin(), seeds.end());
  if (seen.size() > budget) {
    throw BudgetExceeded("restriction closure exceeds budget of " + std::to_string(budget));
  }
  while (!queue.empty()) {
    const Word w = std::move(queue.front());
    queue.pop_front();
    for (auto& r : restrictions(w)) {
      if (seen.insert(r).second) {
        if (seen.size() > budget) {
          throw BudgetExceeded("restriction closure exceeds budget of " + std::to_string(budget));
        }
        queue.push_back(std::move(r));
      }
    }
  }
  return seen;
}

std::set<Word> recurrent_part(const std::set<Word>& vertices) {
  const std::vector<Word> order(vertices.begin(), vertices.end());
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < order.size(); ++i) index.emplace(order[i], i);

  std::vector<std::vector<std::size_t>> adj(order.size());
  std::vector<bool> self_loop(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const auto& r : restrictions(order[i])) {
      const auto it = index.find(r);
      if (it == index.end()) {
        throw InconsistencyError("recurrent_part: vertex set not closed under restriction");
      }
      adj[i].push_back(it->second);
      if (it->second == i) self_loop[i] = true;
    }
  }

  const SccFinder scc(adj);
  std::vector<std::size_t> component_size(scc.component_count());
  for (std::size_t c : scc.component()) ++component_size[c];

  std::vector<bool> keep(order.size());
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (self_loop[i] || component_size[scc.component()[i]] > 1) {
      keep[i] = true;
      queue.push_back(i);
    }
  }
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t w : adj[v]) {
      if (!keep[w]) {
        keep[w] = true;
        queue.push_back(w);
      }
    }
  }

  std::set<Word> out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (keep[i]) out.insert(order[i]);
  }
  return out;
}

std::set<Word> nucleus(const std::vector<Word>& generators, std::size_t budget) {
  std::set<Word> seeds{Word::identity()};
  for (const auto& g : generators) {
    seeds.insert(g);
    seeds.insert(g.inverse());
  }
  std::set<Word> current = recurrent_part(restriction_closure(seeds, budget));
  for (;;) {
    std::set<Word> next = recurrent_part(restriction_closure(products_with(current), budget));
    if (next == current) return current;
    current = std::move(next);
  }
}

bool verify_nucleus(const std::set<Word>& candidate, int depth) {
  std::set<Word> base(candidate);
  for (auto& g : standard_generating_set()) base.insert(std::move(g));
  std::set<Word> level;
  for (const auto& a : base) {
    for (const auto& b : base) level.insert(a * b);
  }
  for (int d = 0; d < depth; ++d) {
    std::set<Word> next;
    for (const auto& w : level) {
      for (auto& r : restrictions(w)) next.insert(std::move(r));
    }
    level = std::move(next);
  }
  return std::includes(candidate.begin(), candidate.end(), level.begin(), level.end());
}

std::optional<int> verification_depth(const std::set<Word>& candidate, int max_depth) {
  for (int k = 1; k <= max_depth; ++k) {
    if (verify_nucleus(candidate, k)) return k;
  }
  return std::nullopt;
}

}  // namespace rabbit
