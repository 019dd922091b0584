#include "lamsol/serialize.hpp"

namespace lamsol {

namespace {

template <typename T>
void put_optional(nlohmann::json& j, const char* key, const std::optional<T>& v) {
  j[key] = v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

template <typename T>
void get_optional(const nlohmann::json& j, const char* key, std::optional<T>& v) {
  if (!j.contains(key) || j.at(key).is_null())
    v.reset();
  else
    v = j.at(key).get<T>();
}

}  // namespace

void to_json(nlohmann::json& j, const PrimePower& v) { j = {{"p", v.p}, {"a", v.a}}; }

void from_json(const nlohmann::json& j, PrimePower& v) {
  j.at("p").get_to(v.p);
  j.at("a").get_to(v.a);
}

void to_json(nlohmann::json& j, const WitnessRecord& v) {
  j = {{"p", v.p}, {"a", v.a}, {"q", v.q}, {"certificate", to_string(v.certificate)}};
  put_optional(j, "f", v.f_value);
}

void from_json(const nlohmann::json& j, WitnessRecord& v) {
  j.at("p").get_to(v.p);
  j.at("a").get_to(v.a);
  j.at("q").get_to(v.q);
  const auto cert = j.at("certificate").get<std::string>();
  if (cert == "shortcut")
    v.certificate = Certificate::ShortcutEq1;
  else if (cert == "full")
    v.certificate = Certificate::FullTree;
  else
    throw std::invalid_argument("unknown certificate '" + cert + "'");
  get_optional(j, "f", v.f_value);
}

void to_json(nlohmann::json& j, const RangeMode& v) {
  j = {{"kind", v.kind == RangeKind::Linear ? "a1" : "pp"}, {"bound", v.bound}};
}

void from_json(const nlohmann::json& j, RangeMode& v) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind != "a1" && kind != "pp") throw std::invalid_argument("unknown range kind '" + kind + "'");
  v.kind = kind == "a1" ? RangeKind::Linear : RangeKind::Proper;
  j.at("bound").get_to(v.bound);
}

void to_json(nlohmann::json& j, const RangeReport& v) {
  j = {{"mode", v.mode},         {"examined", v.examined}, {"witnessed", v.witnessed},
       {"failures", v.failures}, {"records", v.records},   {"complete", v.complete},
       {"elapsed_seconds", v.elapsed_seconds}};
}

void from_json(const nlohmann::json& j, RangeReport& v) {
  j.at("mode").get_to(v.mode);
  j.at("examined").get_to(v.examined);
  j.at("witnessed").get_to(v.witnessed);
  j.at("failures").get_to(v.failures);
  j.at("records").get_to(v.records);
  j.at("complete").get_to(v.complete);
  v.elapsed_seconds = j.value("elapsed_seconds", 0.0);
}

void to_json(nlohmann::json& j, const ChainReport& v) {
  j = {{"p", v.p},       {"x", v.x},         {"count", v.count},         {"max_length", v.max_length},
       {"eps", v.eps},   {"C", v.C},         {"bound", v.bound},         {"satisfied", v.satisfied}};
}

void from_json(const nlohmann::json& j, ChainReport& v) {
  j.at("p").get_to(v.p);
  j.at("x").get_to(v.x);
  j.at("count").get_to(v.count);
  j.at("max_length").get_to(v.max_length);
  j.at("eps").get_to(v.eps);
  j.at("C").get_to(v.C);
  j.at("bound").get_to(v.bound);
  j.at("satisfied").get_to(v.satisfied);
}

void to_json(nlohmann::json& j, const CensusReport& v) {
  j = {{"x", v.x},         {"y", v.y},
       {"count", v.count}, {"eps", v.eps},
       {"C", v.C},         {"c_eps", v.c_eps},
       {"bound", v.bound}, {"in_hypothesis", v.in_hypothesis},
       {"filtered_in_hypothesis", v.filtered_in_hypothesis}};
  put_optional(j, "filter", v.filter);
  put_optional(j, "filtered_bound", v.filtered_bound);
}

void from_json(const nlohmann::json& j, CensusReport& v) {
  j.at("x").get_to(v.x);
  j.at("y").get_to(v.y);
  j.at("count").get_to(v.count);
  j.at("eps").get_to(v.eps);
  j.at("C").get_to(v.C);
  j.at("c_eps").get_to(v.c_eps);
  j.at("bound").get_to(v.bound);
  j.at("in_hypothesis").get_to(v.in_hypothesis);
  j.at("filtered_in_hypothesis").get_to(v.filtered_in_hypothesis);
  get_optional(j, "filter", v.filter);
  get_optional(j, "filtered_bound", v.filtered_bound);
}

void to_json(nlohmann::json& j, const ErhReport& v) {
  j = {{"x", v.x},
       {"m", v.m},
       {"b", v.b},
       {"pi_xmb", v.pi_xmb},
       {"main_term", v.main_term},
       {"error_bound", v.error_bound},
       {"holds", v.holds}};
}

void from_json(const nlohmann::json& j, ErhReport& v) {
  j.at("x").get_to(v.x);
  j.at("m").get_to(v.m);
  j.at("b").get_to(v.b);
  j.at("pi_xmb").get_to(v.pi_xmb);
  j.at("main_term").get_to(v.main_term);
  j.at("error_bound").get_to(v.error_bound);
  j.at("holds").get_to(v.holds);
}

void to_json(nlohmann::json& j, const CEpsResult& v) {
  j = {{"w", v.w},
       {"s", v.s},
       {"dimension", v.dimension},
       {"spectral_radius", v.spectral_radius},
       {"C", v.C},
       {"residual", v.residual}};
}

void from_json(const nlohmann::json& j, CEpsResult& v) {
  j.at("w").get_to(v.w);
  j.at("s").get_to(v.s);
  j.at("dimension").get_to(v.dimension);
  j.at("spectral_radius").get_to(v.spectral_radius);
  j.at("C").get_to(v.C);
  j.at("residual").get_to(v.residual);
}

void to_json(nlohmann::json& j, const ClosureReport& v) {
  nlohmann::json divisor = nlohmann::json::array();
  for (const auto& [p, e] : v.lambda_divisor) divisor.push_back(PrimePower{p, e});
  j = {{"bound", v.bound},
       {"added", v.added},
       {"forced", v.forced},
       {"lambda_divisor", divisor},
       {"primes_below_bound", v.primes_below_bound},
       {"saturated", v.saturated},
       {"fixpoint", v.fixpoint},
       {"iterations", v.iterations}};
}

void from_json(const nlohmann::json& j, ClosureReport& v) {
  j.at("bound").get_to(v.bound);
  j.at("added").get_to(v.added);
  j.at("forced").get_to(v.forced);
  v.lambda_divisor.clear();
  for (const auto& pp : j.at("lambda_divisor").get<std::vector<PrimePower>>()) v.lambda_divisor[pp.p] = pp.a;
  j.at("primes_below_bound").get_to(v.primes_below_bound);
  j.at("saturated").get_to(v.saturated);
  j.at("fixpoint").get_to(v.fixpoint);
  j.at("iterations").get_to(v.iterations);
}

}  // namespace lamsol
