#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "lamsol/witness.hpp"

namespace lamsol {

namespace {

constexpr std::string_view kMagic = "lamsol-checkpoint";

u64 parse_u64(std::string_view text, const std::string& context) {
  u64 v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    throw CheckpointError("checkpoint: bad number '" + std::string(text) + "' in " + context);
  return v;
}

PrimePower parse_prime_power(std::string_view text, const std::string& context) {
  const auto caret = text.find('^');
  if (caret == std::string_view::npos) return {parse_u64(text, context), 1};
  return {parse_u64(text.substr(0, caret), context),
          static_cast<unsigned>(parse_u64(text.substr(caret + 1), context))};
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto at = line.find(sep, start);
    out.push_back(line.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return out;
}

void write_line(std::ostream& out, const WitnessRecord& r) {
  out << r.p << ',' << r.a << ',' << r.q << ',' << to_string(r.certificate) << ',';
  if (r.f_value) out << *r.f_value;
  out << '\n';
}

// Checks one parsed record against the number theory it claims.
void audit_record(const WitnessRecord& r, const std::string& context) {
  const u64 pa = PrimePower{r.p, r.a}.value();
  if ((r.q - 1) % pa != 0 || ((r.q - 1) / pa) % r.p == 0)
    throw CheckpointError("checkpoint: p^a does not exactly divide q-1 in " + context);
  if (!is_prime(r.q)) throw CheckpointError("checkpoint: witness is not prime in " + context);
  if (r.certificate == Certificate::ShortcutEq1 && r.q >= shortcut_bound(r.p, r.a))
    throw CheckpointError("checkpoint: shortcut witness beyond p^(2a+1) in " + context);
  if (r.certificate == Certificate::FullTree && static_cast<u128>(*r.f_value) >= static_cast<u128>(pa) * r.p)
    throw CheckpointError("checkpoint: recorded f(q) is not below p^(a+1) in " + context);
}

}  // namespace

void write_witness_log(std::ostream& out, const std::vector<WitnessRecord>& records,
                       const std::vector<PrimePower>& failures) {
  auto r = records.begin();
  auto f = failures.begin();
  while (r != records.end() || f != failures.end()) {
    if (f == failures.end() || (r != records.end() && r->prime_power() < *f)) {
      write_line(out, *r++);
    } else {
      out << f->p << ',' << f->a << ",,none,\n";
      ++f;
    }
  }
}

void write_checkpoint(std::ostream& out, const Checkpoint& state) {
  out << kMagic << " mode=" << (state.mode.kind == RangeKind::Linear ? "a1" : "pp")
      << " bound=" << state.mode.bound
      << " last=" << (state.last_completed ? to_string(*state.last_completed) : "none")
      << " records=" << state.records.size() + state.failures.size() << '\n';
  write_witness_log(out, state.records, state.failures);
}

static Checkpoint parse_checkpoint(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw CheckpointError("checkpoint: missing header");
  std::istringstream hs(header);
  std::string magic, mode_tok, bound_tok, last_tok, count_tok;
  hs >> magic >> mode_tok >> bound_tok >> last_tok >> count_tok;
  auto value_of = [](const std::string& tok, std::string_view key) {
    if (tok.rfind(std::string(key) + "=", 0) != 0)
      throw CheckpointError("checkpoint: expected '" + std::string(key) + "=' in header");
    return std::string_view(tok).substr(key.size() + 1);
  };
  if (magic != kMagic) throw CheckpointError("checkpoint: not a checkpoint file");

  Checkpoint state;
  const auto mode = value_of(mode_tok, "mode");
  if (mode == "a1")
    state.mode.kind = RangeKind::Linear;
  else if (mode == "pp")
    state.mode.kind = RangeKind::Proper;
  else
    throw CheckpointError("checkpoint: unknown mode '" + std::string(mode) + "'");
  state.mode.bound = parse_u64(value_of(bound_tok, "bound"), "header");
  const auto last = value_of(last_tok, "last");
  if (last != "none") state.last_completed = parse_prime_power(last, "header");
  const u64 expected = parse_u64(value_of(count_tok, "records"), "header");

  std::string line;
  u64 lineno = 1;
  u64 seen = 0;
  std::optional<PrimePower> previous;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const std::string context = "line " + std::to_string(lineno);
    const auto fields = split(line, ',');
    if (fields.size() != 5) throw CheckpointError("checkpoint: expected 5 fields in " + context);
    const PrimePower pp{parse_u64(fields[0], context), static_cast<unsigned>(parse_u64(fields[1], context))};
    if (pp.a == 0 || !is_prime(pp.p)) throw CheckpointError("checkpoint: invalid prime power in " + context);

    if (previous && !(*previous < pp)) throw CheckpointError("checkpoint: records out of order at " + context);
    if (!state.last_completed || *state.last_completed < pp)
      throw CheckpointError("checkpoint: record beyond last completed prime power at " + context);
    const bool linear = state.mode.kind == RangeKind::Linear;
    if (linear ? (pp.a != 1 || pp.p > state.mode.bound) : (pp.a < 2 || pp.value() > state.mode.bound))
      throw CheckpointError("checkpoint: record outside the mode's range at " + context);
    previous = pp;
    ++seen;

    if (fields[3] == "none") {
      if (!fields[2].empty() || !fields[4].empty()) throw CheckpointError("checkpoint: failure with data at " + context);
      state.failures.push_back(pp);
      continue;
    }
    WitnessRecord r{pp.p, pp.a, parse_u64(fields[2], context), Certificate::ShortcutEq1, std::nullopt};
    if (fields[3] == "full") {
      r.certificate = Certificate::FullTree;
      r.f_value = parse_u64(fields[4], context);
    } else if (fields[3] != "shortcut" || !fields[4].empty()) {
      throw CheckpointError("checkpoint: bad certificate in " + context);
    }
    audit_record(r, context);
    state.records.push_back(r);
  }

  if (seen != expected)
    throw CheckpointError("checkpoint: header announces " + std::to_string(expected) + " records, found " +
                          std::to_string(seen));
  if (state.last_completed) {
    const auto all = prime_powers_in(state.mode);
    const auto done = static_cast<u64>(std::upper_bound(all.begin(), all.end(), *state.last_completed) - all.begin());
    if (done != seen || std::find(all.begin(), all.end(), *state.last_completed) == all.end())
      throw CheckpointError("checkpoint: " + std::to_string(seen) + " records do not cover the range up to " +
                            to_string(*state.last_completed));
  }
  return state;
}

Checkpoint read_checkpoint(std::istream& in) {
  try {
    return parse_checkpoint(in);
  } catch (const CheckpointError&) {
    throw;
  } catch (const std::exception& e) {
    throw CheckpointError(std::string("checkpoint: corrupted record: ") + e.what());
  }
}

void checkpoint_save(const Checkpoint& state, const std::filesystem::path& path) {
  // Written to a temporary, then renamed over the target.
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream out(tmp);
    if (!out) throw CheckpointError("checkpoint: cannot write " + tmp.string());
    write_checkpoint(out, state);
    if (!out) throw CheckpointError("checkpoint: write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

Checkpoint checkpoint_load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CheckpointError("checkpoint: cannot read " + path.string());
  return read_checkpoint(in);
}

}  // namespace lamsol
