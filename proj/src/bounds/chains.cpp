#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "lamsol/bounds.hpp"

namespace lamsol {

namespace {

struct ChainTally {
  u64 count = 0;   // chains starting at this prime
  u64 longest = 0;
};

}  // namespace

ChainReport enumerate_chains(u64 p, u64 x, const PrimeSieve& sieve, double eps, double C) {
  require_input_range(p, "enumerate_chains");
  if (!is_prime(p)) throw std::invalid_argument("enumerate_chains: " + std::to_string(p) + " is not prime");
  if (x > sieve.limit())
    throw std::out_of_range("enumerate_chains: x = " + std::to_string(x) + " exceeds sieve limit " +
                            std::to_string(sieve.limit()));

  ChainReport report;
  report.p = p;
  report.x = x;
  report.eps = eps;
  report.C = C;
  report.bound = C * std::pow(static_cast<double>(x) / static_cast<double>(p), 1 + eps);
  if (p > x) return report;

  // Depth-first over successors r = k p_i + 1 <= x, memoized per prime: the
  // chains from r are 1 + the chains from each successor of r.
  std::unordered_map<u64, ChainTally> memo;
  struct Frame {
    u64 prime;
    u64 next;  // next successor candidate to visit
    ChainTally tally;
  };
  auto first_successor = [](u64 r) { return r == 2 ? u64{3} : 2 * r + 1; };
  std::vector<Frame> stack{{p, first_successor(p), {1, 1}}};
  while (!stack.empty()) {
    Frame& top = stack.back();
    const u64 r = top.prime;
    const u64 step = r == 2 ? 2 : 2 * r;  // successors of an odd prime are 1 mod 2r
    bool descended = false;
    for (; top.next <= x && top.next >= r; top.next += step) {
      const u64 cand = top.next;
      if (!sieve.is_prime(cand)) continue;
      if (auto it = memo.find(cand); it != memo.end()) {
        if (top.tally.count > ~u64{0} - it->second.count)
          throw std::overflow_error("enumerate_chains: chain count exceeds 64 bits");
        top.tally.count += it->second.count;
        top.tally.longest = std::max(top.tally.longest, it->second.longest + 1);
        continue;
      }
      stack.push_back({cand, first_successor(cand), {1, 1}});
      descended = true;
      break;
    }
    if (descended) continue;
    memo.emplace(r, top.tally);
    stack.pop_back();
  }

  const ChainTally& root = memo.at(p);
  report.count = root.count;
  report.max_length = root.longest;
  report.satisfied = static_cast<double>(report.count) <= report.bound;
  return report;
}

}  // namespace lamsol
