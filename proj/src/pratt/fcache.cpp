#include <algorithm>
#include <charconv>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <string>

#include "lamsol/pratt.hpp"

namespace lamsol {

FCache::FCache(const FCache& other) {
  std::shared_lock lock(other.mutex_);
  values_ = other.values_;
}

FCache& FCache::operator=(const FCache& other) {
  if (this != &other) {
    auto copy = other.entries();
    std::unique_lock lock(mutex_);
    values_.clear();
    values_.insert(copy.begin(), copy.end());
  }
  return *this;
}

std::optional<u64> FCache::find(u64 q) const {
  std::shared_lock lock(mutex_);
  auto it = values_.find(q);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

void FCache::insert(u64 q, u64 f) {
  std::unique_lock lock(mutex_);
  auto [it, added] = values_.emplace(q, f);
  if (!added && it->second != f)
    throw std::logic_error("FCache: conflicting values for f(" + std::to_string(q) + "): " +
                           std::to_string(it->second) + " vs " + std::to_string(f));
}

std::size_t FCache::size() const {
  std::shared_lock lock(mutex_);
  return values_.size();
}

void FCache::clear() {
  std::unique_lock lock(mutex_);
  values_.clear();
}

std::vector<std::pair<u64, u64>> FCache::entries() const {
  std::vector<std::pair<u64, u64>> out;
  {
    std::shared_lock lock(mutex_);
    out.assign(values_.begin(), values_.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

void FCache::merge(const FCache& other) {
  if (this == &other) return;
  for (const auto& [q, f] : other.entries()) insert(q, f);
}

void FCache::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("FCache: cannot write " + path.string());
  for (const auto& [q, f] : entries()) out << q << ',' << f << '\n';
  if (!out) throw std::runtime_error("FCache: write failed for " + path.string());
}

void FCache::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("FCache: cannot read " + path.string());
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto comma = line.find(',');
    u64 q = 0;
    u64 f = 0;
    bool ok = comma != std::string::npos;
    if (ok) {
      const char* b = line.data();
      auto r1 = std::from_chars(b, b + comma, q);
      auto r2 = std::from_chars(b + comma + 1, b + line.size(), f);
      ok = r1.ec == std::errc{} && r1.ptr == b + comma && r2.ec == std::errc{} &&
           r2.ptr == b + line.size();
    }
    if (!ok)
      throw std::runtime_error("FCache: malformed record at " + path.string() + ":" +
                               std::to_string(lineno));
    insert(q, f);
  }
}

}  // namespace lamsol
