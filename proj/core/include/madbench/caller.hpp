#pragma once

#include <optional>
#include <string>
#include <vector>

#include "madbench/backend.hpp"
#include "madbench/router.hpp"

namespace madbench {

// Routes each generation of one debate run to a model and accumulates the
// run's usage ledger. With router weights, every generation consumes exactly
// one uniform draw (judger roles can be pinned to a fixed model instead, in
// which case they draw nothing). A Caller belongs to exactly one run and is
// not shared across threads.
class Caller {
 public:
  // Fixed single model.
  Caller(ChatBackend& backend, ModelEndpoint endpoint, GenerationParams params);

  // Heterogeneous: per-generation sampling over the configured endpoints.
  Caller(ChatBackend& backend, std::vector<ModelEndpoint> endpoints, RouterWeights weights,
         RngStream rng, GenerationParams params,
         std::optional<std::string> judger_pinned_model = std::nullopt);

  struct Reply {
    std::string text;
    Usage usage;
    std::string model_id;
    std::string request_digest;
  };

  Reply generate(const Transcript& turns, const CallMeta& meta, bool judger_role = false);

  const Usage& usage_total() const { return total_; }
  const GenerationParams& params() const { return params_; }

 private:
  const ModelEndpoint& resolve(const std::string& model_id) const;

  ChatBackend& backend_;
  std::vector<ModelEndpoint> endpoints_;
  std::optional<RouterWeights> weights_;
  std::optional<RngStream> rng_;
  std::optional<std::string> judger_pin_;
  GenerationParams params_;
  Usage total_;
};

}  // namespace madbench
