#include "madbench/caller.hpp"

#include "madbench/errors.hpp"

namespace madbench {

Caller::Caller(ChatBackend& backend, ModelEndpoint endpoint, GenerationParams params)
    : backend_(backend), endpoints_{std::move(endpoint)}, params_(params) {}

Caller::Caller(ChatBackend& backend, std::vector<ModelEndpoint> endpoints,
               RouterWeights weights, RngStream rng, GenerationParams params,
               std::optional<std::string> judger_pinned_model)
    : backend_(backend),
      endpoints_(std::move(endpoints)),
      weights_(std::move(weights)),
      rng_(std::move(rng)),
      judger_pin_(std::move(judger_pinned_model)),
      params_(params) {
  ensure_valid(*weights_);
  for (const auto& [id, p] : weights_->entries) resolve(id);  // fail fast on unknown ids
  if (judger_pin_) resolve(*judger_pin_);
}

const ModelEndpoint& Caller::resolve(const std::string& model_id) const {
  for (const auto& e : endpoints_) {
    if (e.model_id == model_id) return e;
  }
  throw ConfigError("router references unknown model_id: " + model_id);
}

Caller::Reply Caller::generate(const Transcript& turns, const CallMeta& meta,
                               bool judger_role) {
  const ModelEndpoint* endpoint = &endpoints_.front();
  if (weights_) {
    if (judger_role && judger_pin_) {
      endpoint = &resolve(*judger_pin_);
    } else {
      endpoint = &resolve(select_model(*weights_, *rng_));
    }
  }
  Completion c = backend_.complete(*endpoint, turns, params_, meta);
  if (c.text.empty()) throw ProtocolError("backend returned empty completion text");
  total_ = merge_usage(total_, c.usage);
  return Reply{std::move(c.text), c.usage, endpoint->model_id, transcript_digest(turns)};
}

}  // namespace madbench
