#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <tuple>

#include "json.hpp"
#include "madbench/chat.hpp"

namespace madbench {

// Implementations must tolerate simultaneous complete() calls; per-run usage
// accounting happens in the caller, not here.
class ChatBackend {
 public:
  virtual ~ChatBackend() = default;

  // Returns assistant text plus a Usage with llm_calls == 1. The transcript
  // is never mutated. Throws TransportError / ConfigError / ProtocolError.
  virtual Completion complete(const ModelEndpoint& endpoint, const Transcript& turns,
                              const GenerationParams& params, const CallMeta& meta) = 0;
};

struct MockEntry {
  std::string text;
  std::int64_t prompt_tokens = 0;
  std::int64_t completion_tokens = 0;
};

// Scripted responses keyed by (question_id, agent, round). Lookups are pure:
// the same key yields the same text across process runs and thread schedules.
struct MockScript {
  enum class Fallback { error, echo_answer };

  std::map<std::tuple<std::string, std::string, int>, MockEntry> entries;
  Fallback fallback = Fallback::error;
  std::string echo_label = "A";

  MockScript& add(std::string question_id, std::string agent, int round, std::string text,
                  std::int64_t prompt_tokens = 0, std::int64_t completion_tokens = 0);

  nlohmann::json to_json() const;
  static MockScript from_json(const nlohmann::json& j);
  static MockScript load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;
};

class MockBackend final : public ChatBackend {
 public:
  explicit MockBackend(MockScript script) : script_(std::move(script)) {}

  Completion complete(const ModelEndpoint& endpoint, const Transcript& turns,
                      const GenerationParams& params, const CallMeta& meta) override;

 private:
  const MockScript script_;  // immutable: safe for concurrent lookups
};

struct RetryPolicy {
  int max_attempts = 3;
  std::chrono::milliseconds initial_backoff{200};  // doubles per retry
};

// OpenAI-compatible chat-completions client.
// POST {base_url}/chat/completions with {model, messages, temperature,
// top_p, max_tokens?}; reads choices[0].message.content and usage counters
// (missing usage fields count as 0, with a warning). Transport failures and
// 5xx responses retry with exponential backoff; 4xx never retries. Token
// usage reported by failed attempts is folded into the final Usage; only the
// completed generation counts as an llm_call.
class HttpBackend final : public ChatBackend {
 public:
  explicit HttpBackend(RetryPolicy retry = {}) : retry_(retry) {}

  Completion complete(const ModelEndpoint& endpoint, const Transcript& turns,
                      const GenerationParams& params, const CallMeta& meta) override;

  static nlohmann::json build_request_body(const ModelEndpoint& endpoint,
                                           const Transcript& turns,
                                           const GenerationParams& params);

 private:
  RetryPolicy retry_;
};

}  // namespace madbench
