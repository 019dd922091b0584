#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "lamsol/pratt.hpp"

namespace lamsol {

namespace {

void require_prime(u64 q, const char* what) {
  require_input_range(q, what);
  if (!is_prime(q)) throw std::invalid_argument(std::string(what) + ": " + std::to_string(q) + " is not prime");
}

}  // namespace

PrattTree build_tree(u64 q) {
  require_prime(q, "build_tree");
  PrattTree tree{PrattNode{{q, 1}, {}}};
  std::vector<PrattNode*> pending{&tree.root};
  while (!pending.empty()) {
    PrattNode* node = pending.back();
    pending.pop_back();
    for (const PrimePower& pp : factorize(node->value.p - 1)) node->children.push_back({pp, {}});
    // Children are complete, so their addresses are stable from here on.
    for (auto& child : node->children) pending.push_back(&child);
  }
  return tree;
}

std::size_t PrattTree::node_count() const {
  std::size_t n = 0;
  std::vector<const PrattNode*> stack{&root};
  while (!stack.empty()) {
    const PrattNode* node = stack.back();
    stack.pop_back();
    ++n;
    for (const auto& c : node->children) stack.push_back(&c);
  }
  return n;
}

std::size_t PrattTree::depth() const {
  std::size_t best = 0;
  std::vector<std::pair<const PrattNode*, std::size_t>> stack{{&root, 0}};
  while (!stack.empty()) {
    auto [node, d] = stack.back();
    stack.pop_back();
    best = std::max(best, d);
    for (const auto& c : node->children) stack.push_back({&c, d + 1});
  }
  return best;
}

u64 PrattTree::max_proper_prime_power() const {
  u64 best = 1;
  std::vector<const PrattNode*> stack{&root};
  while (!stack.empty()) {
    const PrattNode* node = stack.back();
    stack.pop_back();
    if (node->value.proper()) best = std::max(best, node->value.value());
    for (const auto& c : node->children) stack.push_back(&c);
  }
  return best;
}

std::string export_dot(const PrattTree& tree) {
  std::ostringstream nodes;
  std::ostringstream edges;
  std::size_t next_id = 0;
  // (node, id of parent or -1), visited in preorder.
  std::vector<std::pair<const PrattNode*, long>> stack{{&tree.root, -1}};
  while (!stack.empty()) {
    auto [node, parent] = stack.back();
    stack.pop_back();
    const std::size_t id = next_id++;
    nodes << "  n" << id << " [label=\"" << to_string(node->value) << "\"];\n";
    if (parent >= 0) edges << "  n" << parent << " -> n" << id << ";\n";
    for (auto it = node->children.rbegin(); it != node->children.rend(); ++it)
      stack.push_back({&*it, static_cast<long>(id)});
  }
  return "digraph T {\n" + nodes.str() + edges.str() + "}\n";
}

PrimePower largest_prime_power_divisor(u64 n) {
  require_input_range(n, "largest_prime_power_divisor");
  if (n < 2) throw std::invalid_argument("largest_prime_power_divisor: n must be at least 2");
  PrimePower best{};
  u64 best_value = 0;
  for (const PrimePower& pp : factorize(n)) {
    const u64 v = pp.value();
    if (v > best_value) {
      best = pp;
      best_value = v;
    }
  }
  return best;
}

u64 f_of(u64 q, FCache& cache) {
  require_prime(q, "f_of");
  if (auto hit = cache.find(q)) return *hit;

  std::vector<u64> work{q};
  while (!work.empty()) {
    const u64 v = work.back();
    if (v == 2) {
      cache.insert(2, 1);
      work.pop_back();
      continue;
    }
    if (cache.find(v)) {
      work.pop_back();
      continue;
    }
    u64 best = 1;
    bool blocked = false;
    for (const auto& pp : factorize(v - 1)) {
      if (pp.proper()) {
        best = std::max(best, pp.value());
      } else if (auto fp = cache.find(pp.p)) {
        best = std::max(best, *fp);
      } else {
        work.push_back(pp.p);
        blocked = true;
      }
    }
    if (!blocked) {
      cache.insert(v, best);
      work.pop_back();
    }
  }
  return *cache.find(q);
}

u64 f_of(u64 q) {
  FCache local;
  return f_of(q, local);
}

}  // namespace lamsol
