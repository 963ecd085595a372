#include "madbench/backend.hpp"

#include <fstream>

#include "madbench/errors.hpp"

namespace madbench {

MockScript& MockScript::add(std::string question_id, std::string agent, int round,
                            std::string text, std::int64_t prompt_tokens,
                            std::int64_t completion_tokens) {
  entries[{std::move(question_id), std::move(agent), round}] =
      MockEntry{std::move(text), prompt_tokens, completion_tokens};
  return *this;
}

nlohmann::json MockScript::to_json() const {
  nlohmann::json j;
  if (fallback == Fallback::error) {
    j["fallback"] = {{"policy", "error"}};
  } else {
    j["fallback"] = {{"policy", "echo_answer"}, {"label", echo_label}};
  }
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [key, entry] : entries) {
    arr.push_back({{"question_id", std::get<0>(key)},
                   {"agent", std::get<1>(key)},
                   {"round", std::get<2>(key)},
                   {"text", entry.text},
                   {"prompt_tokens", entry.prompt_tokens},
                   {"completion_tokens", entry.completion_tokens}});
  }
  j["entries"] = arr;
  return j;
}

MockScript MockScript::from_json(const nlohmann::json& j) {
  MockScript s;
  if (j.contains("fallback")) {
    const auto& f = j.at("fallback");
    const std::string policy = f.at("policy").get<std::string>();
    if (policy == "error") {
      s.fallback = Fallback::error;
    } else if (policy == "echo_answer") {
      s.fallback = Fallback::echo_answer;
      s.echo_label = f.value("label", "A");
    } else {
      throw ConfigError("unknown mock fallback policy: " + policy);
    }
  }
  for (const auto& e : j.value("entries", nlohmann::json::array())) {
    s.add(e.at("question_id").get<std::string>(), e.at("agent").get<std::string>(),
          e.at("round").get<int>(), e.at("text").get<std::string>(),
          e.value("prompt_tokens", 0), e.value("completion_tokens", 0));
  }
  return s;
}

MockScript MockScript::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("mock script not found: " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("malformed mock script " + path.string() + ": " + e.what());
  }
  return from_json(j);
}

void MockScript::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write mock script: " + path.string());
  out << to_json().dump(2) << '\n';
}

Completion MockBackend::complete(const ModelEndpoint& endpoint, const Transcript& turns,
                                 const GenerationParams& params, const CallMeta& meta) {
  (void)endpoint;
  (void)params;
  if (turns.empty()) throw ProtocolError("mock backend: empty transcript");
  auto it = script_.entries.find({meta.question_id, meta.agent, meta.round});
  if (it == script_.entries.end()) {
    if (script_.fallback == MockScript::Fallback::error) {
      throw ScriptMissError("mock script miss: (" + meta.question_id + ", " + meta.agent +
                            ", " + std::to_string(meta.round) + ")");
    }
    return Completion{"The answer is (" + script_.echo_label + ").", Usage{0, 0, 1}};
  }
  if (it->second.text.empty()) throw ProtocolError("mock script produced empty completion");
  return Completion{it->second.text,
                    Usage{it->second.prompt_tokens, it->second.completion_tokens, 1}};
}

}  // namespace madbench
