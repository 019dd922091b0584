#pragma once

// Witness search: for a prime power p^a, find a prime q with p^a || q - 1
// and f(q) < p^(a+1). Any such q below p^(2a+1) qualifies without computing
// f(q), since f(q) never exceeds the largest prime power dividing q - 1.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lamsol/arith.hpp"
#include "lamsol/pratt.hpp"

namespace lamsol {

enum class Certificate {
  ShortcutEq1,  // q < p^(2a+1)
  FullTree,     // f(q) computed and found below p^(a+1)
};

std::string to_string(Certificate c);

struct WitnessRecord {
  u64 p = 0;
  unsigned a = 0;
  u64 q = 0;
  Certificate certificate = Certificate::ShortcutEq1;
  std::optional<u64> f_value;  // set iff certificate == FullTree

  PrimePower prime_power() const { return {p, a}; }
  friend bool operator==(const WitnessRecord&, const WitnessRecord&) = default;
};

/// p^(2a+1), saturated at 2^127.
u128 shortcut_bound(u64 p, unsigned a);

/// Smallest prime q <= search_limit of the form k p^a + 1 (p not dividing k)
/// with f(q) < p^(a+1), or nullopt. Throws std::invalid_argument on bad
/// arguments and std::out_of_range when search_limit is not below 2^63.
std::optional<WitnessRecord> find_witness(u64 p, unsigned a, u64 search_limit, FCache& cache);
std::optional<WitnessRecord> find_witness(u64 p, unsigned a, u64 search_limit);

enum class RangeKind {
  Linear,  // a = 1, p <= bound
  Proper,  // a >= 2, p^a <= bound
};

struct RangeMode {
  RangeKind kind = RangeKind::Linear;
  u64 bound = 0;

  friend bool operator==(const RangeMode&, const RangeMode&) = default;
};

std::string to_string(const RangeMode& mode);

/// The prime powers covered by mode, ordered by (p, a).
std::vector<PrimePower> prime_powers_in(const RangeMode& mode);

struct SearchPolicy {
  // Default: every prime power is searched for q < p^(2a+1), capped here.
  u64 cap = kInputLimit - 1;
  // Extended: search up to this limit, with full f evaluation past p^(2a+1).
  std::optional<u64> extended_limit;

  u64 limit_for(u64 p, unsigned a) const;
};

struct RangeReport {
  RangeMode mode;
  u64 examined = 0;
  u64 witnessed = 0;
  std::vector<PrimePower> failures;
  std::vector<WitnessRecord> records;  // sorted by (p, a)
  bool complete = true;
  double elapsed_seconds = 0;

  /// Equality ignores elapsed_seconds.
  friend bool operator==(const RangeReport& x, const RangeReport& y) {
    return x.mode == y.mode && x.examined == y.examined && x.witnessed == y.witnessed &&
           x.failures == y.failures && x.records == y.records && x.complete == y.complete;
  }
};

struct Checkpoint {
  RangeMode mode;
  std::optional<PrimePower> last_completed;
  std::vector<WitnessRecord> records;
  std::vector<PrimePower> failures;

  friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
};

class CheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void checkpoint_save(const Checkpoint& state, const std::filesystem::path& path);
Checkpoint checkpoint_load(const std::filesystem::path& path);

void write_checkpoint(std::ostream& out, const Checkpoint& state);
Checkpoint read_checkpoint(std::istream& in);

/// One "p,a,q,certificate,f" line per prime power, sorted by (p, a).
/// Failures are written as "p,a,,none,".
void write_witness_log(std::ostream& out, const std::vector<WitnessRecord>& records,
                       const std::vector<PrimePower>& failures);

struct RunControl {
  unsigned workers = 1;
  std::size_t batch_size = 4096;
  // Saved after every batch when set.
  std::optional<std::filesystem::path> checkpoint_path;
  // Progress to continue from; its mode must match.
  std::optional<Checkpoint> resume;
  // Stop once this prime power is done, leaving an incomplete report.
  std::optional<PrimePower> stop_after;
  // Memo table for full f evaluations; a private one is used when null.
  FCache* cache = nullptr;
};

RangeReport verify_range(const RangeMode& mode, const SearchPolicy& policy = {},
                         const RunControl& control = {});

}  // namespace lamsol
