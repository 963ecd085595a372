#include <cstdlib>
#include <iostream>
#include <thread>

#include "httplib.h"
#include "madbench/backend.hpp"
#include "madbench/errors.hpp"

namespace madbench {
namespace {

struct SplitUrl {
  std::string host;    // scheme://host[:port]
  std::string prefix;  // path prefix, possibly empty
};

SplitUrl split_base_url(const std::string& base_url) {
  auto scheme_end = base_url.find("://");
  if (scheme_end == std::string::npos) {
    throw ConfigError("base_url must include a scheme: " + base_url);
  }
  auto path_start = base_url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {base_url, ""};
  std::string prefix = base_url.substr(path_start);
  while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
  return {base_url.substr(0, path_start), prefix};
}

std::int64_t usage_field(const nlohmann::json& usage, const char* key, bool* missing) {
  if (usage.contains(key) && usage[key].is_number()) {
    return usage[key].get<std::int64_t>();
  }
  *missing = true;
  return 0;
}

// Best-effort usage parse from any response body, including failed attempts.
Usage parse_usage(const nlohmann::json& body, const std::string& model_id) {
  Usage u;
  if (!body.contains("usage") || !body["usage"].is_object()) {
    std::cerr << "[madbench] warning: response from " << model_id
              << " carries no usage block; counting 0 tokens\n";
    return u;
  }
  bool missing = false;
  u.prompt_tokens = usage_field(body["usage"], "prompt_tokens", &missing);
  u.completion_tokens = usage_field(body["usage"], "completion_tokens", &missing);
  if (missing) {
    std::cerr << "[madbench] warning: partial usage block from " << model_id
              << "; missing fields counted as 0\n";
  }
  return u;
}

}  // namespace

nlohmann::json HttpBackend::build_request_body(const ModelEndpoint& endpoint,
                                               const Transcript& turns,
                                               const GenerationParams& params) {
  nlohmann::json messages = nlohmann::json::array();
  for (const auto& t : turns) {
    messages.push_back({{"role", to_string(t.role)}, {"content", t.content}});
  }
  nlohmann::json body = {{"model", endpoint.wire_model_name},
                         {"messages", messages},
                         {"temperature", params.temperature},
                         {"top_p", params.top_p}};
  if (params.max_tokens) body["max_tokens"] = *params.max_tokens;
  return body;
}

Completion HttpBackend::complete(const ModelEndpoint& endpoint, const Transcript& turns,
                                 const GenerationParams& params, const CallMeta& meta) {
  (void)meta;
  if (turns.empty()) throw ProtocolError("http backend: empty transcript");

  const SplitUrl url = split_base_url(endpoint.base_url);
  const std::string path = url.prefix + "/chat/completions";
  const std::string body = build_request_body(endpoint, turns, params).dump();

  httplib::Headers headers;
  if (!endpoint.api_key_ref.empty()) {
    const char* key = std::getenv(endpoint.api_key_ref.c_str());
    if (key == nullptr) {
      throw ConfigError("credential env var not set: " + endpoint.api_key_ref);
    }
    headers.emplace("Authorization", std::string("Bearer ") + key);
  }

  Usage accumulated;  // tokens reported by failed attempts still count
  std::string last_error;
  for (int attempt = 1; attempt <= retry_.max_attempts; ++attempt) {
    if (attempt > 1) {
      std::this_thread::sleep_for(retry_.initial_backoff * (1 << (attempt - 2)));
    }
    httplib::Client client(url.host);
    client.set_read_timeout(300, 0);
    client.set_connection_timeout(10, 0);

    auto res = client.Post(path, headers, body, "application/json");
    if (!res) {
      last_error = "transport failure: " + httplib::to_string(res.error());
      continue;
    }
    nlohmann::json reply = nlohmann::json::parse(res->body, nullptr, false);
    if (res->status >= 500) {
      last_error = "server error " + std::to_string(res->status);
      if (!reply.is_discarded() && reply.contains("usage")) {
        accumulated = merge_usage(accumulated, parse_usage(reply, endpoint.model_id));
      }
      continue;
    }
    if (res->status >= 400) {
      throw ConfigError("endpoint " + endpoint.model_id + " rejected request (HTTP " +
                        std::to_string(res->status) + "): " + res->body);
    }
    if (reply.is_discarded()) {
      throw ProtocolError("endpoint " + endpoint.model_id + " returned malformed JSON");
    }
    std::string content;
    if (reply.contains("choices") && reply["choices"].is_array() &&
        !reply["choices"].empty()) {
      const auto& msg = reply["choices"][0];
      if (msg.contains("message") && msg["message"].contains("content") &&
          msg["message"]["content"].is_string()) {
        content = msg["message"]["content"].get<std::string>();
      }
    }
    if (content.empty()) {
      throw ProtocolError("endpoint " + endpoint.model_id + " returned an empty completion");
    }
    Usage usage = merge_usage(accumulated, parse_usage(reply, endpoint.model_id));
    usage.llm_calls = 1;  // only the completed generation counts
    return Completion{std::move(content), usage};
  }
  throw TransportError("endpoint " + endpoint.model_id + " unreachable after " +
                           std::to_string(retry_.max_attempts) + " attempts: " + last_error,
                       retry_.max_attempts);
}

}  // namespace madbench
