#include "madbench/router.hpp"

#include <cmath>
#include <set>

#include "madbench/chat.hpp"
#include "madbench/errors.hpp"

namespace madbench {

RouterWeights RouterWeights::uniform(const std::vector<std::string>& model_ids) {
  RouterWeights w;
  const double p = 1.0 / static_cast<double>(model_ids.size());
  for (const auto& id : model_ids) w.entries.emplace_back(id, p);
  return w;
}

const char* to_string(WeightsError e) {
  switch (e) {
    case WeightsError::ok: return "ok";
    case WeightsError::empty: return "empty";
    case WeightsError::negative_weight: return "negative_weight";
    case WeightsError::duplicate_model: return "duplicate_model";
    case WeightsError::sum_not_one: return "sum_not_one";
  }
  return "ok";
}

WeightsError validate(const RouterWeights& weights) {
  if (weights.entries.empty()) return WeightsError::empty;
  std::set<std::string> seen;
  double sum = 0.0;
  for (const auto& [id, p] : weights.entries) {
    if (p < 0.0) return WeightsError::negative_weight;
    if (!seen.insert(id).second) return WeightsError::duplicate_model;
    sum += p;
  }
  if (std::fabs(sum - 1.0) > 1e-9) return WeightsError::sum_not_one;
  return WeightsError::ok;
}

void ensure_valid(const RouterWeights& weights) {
  WeightsError e = validate(weights);
  if (e != WeightsError::ok) {
    throw ConfigError(std::string("invalid router weights: ") + to_string(e));
  }
}

RngStream::RngStream(std::uint64_t run_seed, std::string_view question_id, int trial_index) {
  std::uint64_t h = fnv1a64_u64(run_seed, 0xcbf29ce484222325ULL);
  h = fnv1a64(question_id, h);
  h = fnv1a64_u64(static_cast<std::uint64_t>(trial_index), h);
  engine_.seed(h);
}

RngStream::RngStream(std::uint64_t raw_seed) : engine_(raw_seed) {}

double RngStream::next_uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::string select_model(const RouterWeights& weights, RngStream& rng) {
  const double u = rng.next_uniform();
  double cumulative = 0.0;
  for (const auto& [id, p] : weights.entries) {
    cumulative += p;
    if (u < cumulative) return id;
  }
  return weights.entries.back().first;  // guards the u ~ 1.0 rounding edge
}

}  // namespace madbench
