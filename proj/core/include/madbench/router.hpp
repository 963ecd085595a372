#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace madbench {

// Per-generation model selection probabilities. Entry order matters: the
// inverse-CDF walk and tie handling follow it.
struct RouterWeights {
  std::vector<std::pair<std::string, double>> entries;  // (model_id, p)

  static RouterWeights uniform(const std::vector<std::string>& model_ids);
};

enum class WeightsError { ok, empty, negative_weight, duplicate_model, sum_not_one };

const char* to_string(WeightsError e);

// ok iff: at least one entry, all p >= 0, model_ids distinct, sum within
// 1e-9 of 1.
WeightsError validate(const RouterWeights& weights);

// Throws ConfigError naming the failed rule.
void ensure_valid(const RouterWeights& weights);

// Deterministic draw stream. One stream per debate run, derived from
// (run_seed, question_id, trial_index); the call index is the position in
// the stream. Identical derivation tuples produce identical sequences on
// every platform (mt19937_64 plus an explicit 53-bit uniform).
class RngStream {
 public:
  RngStream(std::uint64_t run_seed, std::string_view question_id, int trial_index);
  explicit RngStream(std::uint64_t raw_seed);

  std::uint64_t next_u64() { return engine_(); }
  double next_uniform();  // [0, 1)

 private:
  std::mt19937_64 engine_;
};

// One uniform draw, inverse CDF over the ordered entries. A draw strictly
// below a cumulative bound selects that entry.
std::string select_model(const RouterWeights& weights, RngStream& rng);

}  // namespace madbench
