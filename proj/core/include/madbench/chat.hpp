#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace madbench {

enum class Role { system, user, assistant };

const char* to_string(Role role);
Role role_from_string(const std::string& s);

// One message in a chat exchange. Assistant turns returned by a backend
// always have non-empty content.
struct ChatTurn {
  Role role = Role::user;
  std::string content;
};

using Transcript = std::vector<ChatTurn>;

// Sampling settings sent on the wire with every request.
struct GenerationParams {
  double temperature = 1.0;
  double top_p = 1.0;
  std::optional<int> max_tokens;
  std::optional<std::int64_t> seed;  // local reproducibility only, never sent

  void validate() const;  // throws ConfigError
};

// A named model plus how to reach it. api_key_ref names an environment
// variable holding the credential; several endpoints can use different ones.
struct ModelEndpoint {
  std::string model_id;         // unique key within a run configuration
  std::string base_url;         // e.g. http://localhost:8080/v1
  std::string api_key_ref;      // env var name; empty -> no Authorization header
  std::string wire_model_name;  // value of "model" in the request body
};

// Token and call accounting. Additive under merge.
struct Usage {
  std::int64_t prompt_tokens = 0;
  std::int64_t completion_tokens = 0;
  std::int64_t llm_calls = 0;

  std::int64_t total_tokens() const { return prompt_tokens + completion_tokens; }

  bool operator==(const Usage&) const = default;
};

Usage merge_usage(const Usage& a, const Usage& b);

// Identifies a generation step so the deterministic mock can script it.
// HTTP backends ignore it.
struct CallMeta {
  std::string question_id;
  std::string agent;
  int round = 0;
};

struct Completion {
  std::string text;
  Usage usage;  // llm_calls == 1 for every completed generation
};

// Stable 64-bit FNV-1a, used for seed derivation and request digests.
std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t h = 0xcbf29ce484222325ULL);
std::uint64_t fnv1a64_u64(std::uint64_t value, std::uint64_t h);
std::string transcript_digest(const Transcript& turns);

}  // namespace madbench
