#include "madbench/chat.hpp"

#include <array>
#include <cstdio>

#include "madbench/errors.hpp"

namespace madbench {

const char* to_string(Role role) {
  switch (role) {
    case Role::system: return "system";
    case Role::user: return "user";
    case Role::assistant: return "assistant";
  }
  return "user";
}

Role role_from_string(const std::string& s) {
  if (s == "system") return Role::system;
  if (s == "user") return Role::user;
  if (s == "assistant") return Role::assistant;
  throw ConfigError("unknown chat role: " + s);
}

void GenerationParams::validate() const {
  if (temperature < 0.0) throw ConfigError("temperature must be >= 0");
  if (!(top_p > 0.0 && top_p <= 1.0)) throw ConfigError("top_p must be in (0, 1]");
  if (max_tokens && *max_tokens <= 0) throw ConfigError("max_tokens must be positive");
}

Usage merge_usage(const Usage& a, const Usage& b) {
  return Usage{a.prompt_tokens + b.prompt_tokens,
               a.completion_tokens + b.completion_tokens,
               a.llm_calls + b.llm_calls};
}

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t h) {
  constexpr std::uint64_t kPrime = 0x100000001b3ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= kPrime;
  }
  return h;
}

std::uint64_t fnv1a64_u64(std::uint64_t value, std::uint64_t h) {
  std::array<char, 8> buf;
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((value >> (8 * i)) & 0xff);
  return fnv1a64(std::string_view(buf.data(), buf.size()), h);
}

std::string transcript_digest(const Transcript& turns) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& t : turns) {
    h = fnv1a64(to_string(t.role), h);
    h = fnv1a64(std::string_view("\x1f", 1), h);
    h = fnv1a64(t.content, h);
    h = fnv1a64(std::string_view("\x1e", 1), h);
  }
  char out[17];
  std::snprintf(out, sizeof(out), "%016llx", static_cast<unsigned long long>(h));
  return std::string(out);
}

}  // namespace madbench
