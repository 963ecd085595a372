#include <algorithm>
#include <cctype>

#include "detail.hpp"
#include "madbench/errors.hpp"

namespace madbench {

const char* to_string(ProtocolKind k) {
  switch (k) {
    case ProtocolKind::SA: return "SA";
    case ProtocolKind::CoT: return "CoT";
    case ProtocolKind::SC: return "SC";
    case ProtocolKind::SoM: return "SoM";
    case ProtocolKind::MP: return "MP";
    case ProtocolKind::EoT: return "EoT";
    case ProtocolKind::ChatEval: return "ChatEval";
    case ProtocolKind::AgentVerse: return "AgentVerse";
  }
  return "SA";
}

ProtocolKind protocol_kind_from_string(const std::string& s) {
  if (s == "SA") return ProtocolKind::SA;
  if (s == "CoT") return ProtocolKind::CoT;
  if (s == "SC") return ProtocolKind::SC;
  if (s == "SoM") return ProtocolKind::SoM;
  if (s == "MP") return ProtocolKind::MP;
  if (s == "EoT") return ProtocolKind::EoT;
  if (s == "ChatEval") return ProtocolKind::ChatEval;
  if (s == "AgentVerse") return ProtocolKind::AgentVerse;
  throw ConfigError("unknown protocol kind: " + s);
}

const char* to_string(StopReason r) {
  switch (r) {
    case StopReason::fixed_rounds: return "fixed_rounds";
    case StopReason::consensus: return "consensus";
    case StopReason::judger_decision: return "judger_decision";
    case StopReason::evaluator_accept: return "evaluator_accept";
    case StopReason::max_rounds: return "max_rounds";
  }
  return "fixed_rounds";
}

StopReason stop_reason_from_string(const std::string& s) {
  if (s == "fixed_rounds") return StopReason::fixed_rounds;
  if (s == "consensus") return StopReason::consensus;
  if (s == "judger_decision") return StopReason::judger_decision;
  if (s == "evaluator_accept") return StopReason::evaluator_accept;
  if (s == "max_rounds") return StopReason::max_rounds;
  throw ConfigError("unknown stop reason: " + s);
}

ProtocolConfig ProtocolConfig::defaults(ProtocolKind kind) {
  ProtocolConfig c;
  c.kind = kind;
  switch (kind) {
    case ProtocolKind::SA:
    case ProtocolKind::CoT:
      break;
    case ProtocolKind::SC:
      c.sc_samples = 6;
      break;
    case ProtocolKind::SoM:
      c.num_agents = 3;
      c.num_rounds = 2;
      break;
    case ProtocolKind::MP:
      c.num_agents = 3;  // affirmative + negative + judge, fixed
      c.max_rounds = 5;
      break;
    case ProtocolKind::EoT:
      c.num_agents = 3;
      c.max_rounds = 5;
      break;
    case ProtocolKind::ChatEval:
      c.num_agents = 3;  // General Public, Critic, Scientist, fixed
      c.num_rounds = 2;
      break;
    case ProtocolKind::AgentVerse:
      c.num_agents = 3;  // critics
      c.max_rounds = 1;  // cycles; one cycle is six calls
      break;
  }
  return c;
}

void ProtocolConfig::validate() const {
  if (num_agents < 1) throw ConfigError("num_agents must be >= 1");
  if (num_rounds < 1) throw ConfigError("num_rounds must be >= 1");
  if (max_rounds < 1) throw ConfigError("max_rounds must be >= 1");
  if (sc_samples < 1) throw ConfigError("sc_samples must be >= 1");
  if (cot_style && kind != ProtocolKind::SoM && kind != ProtocolKind::ChatEval) {
    throw ConfigError(std::string("cot_style is not applicable to ") + to_string(kind) +
                      ": its agents already answer in a step-by-step style");
  }
  if (kind == ProtocolKind::MP && num_agents != 3) {
    throw ConfigError("MP roles are fixed: affirmative, negative, judge");
  }
  if (kind == ProtocolKind::ChatEval && num_agents != 3) {
    throw ConfigError("ChatEval roles are fixed: General Public, Critic, Scientist");
  }
  if ((kind == ProtocolKind::SA || kind == ProtocolKind::CoT) && num_agents != 1) {
    throw ConfigError("single-agent strategies use exactly one agent");
  }
}

nlohmann::json ProtocolConfig::to_json() const {
  nlohmann::json j;
  j["kind"] = to_string(kind);
  j["num_agents"] = num_agents;
  j["num_rounds"] = num_rounds;
  j["max_rounds"] = max_rounds;
  j["sc_samples"] = sc_samples;
  j["cot_style"] = cot_style;
  j["eot_confidence_across_agents"] = eot_confidence_across_agents;
  if (judger_pinned_model) {
    j["judger_pinned_model"] = *judger_pinned_model;
  } else {
    j["judger_pinned_model"] = nullptr;
  }
  return j;
}

ProtocolConfig ProtocolConfig::from_json(const nlohmann::json& j) {
  ProtocolConfig c = defaults(protocol_kind_from_string(j.at("kind").get<std::string>()));
  if (j.contains("num_agents")) c.num_agents = j["num_agents"].get<int>();
  if (j.contains("num_rounds")) c.num_rounds = j["num_rounds"].get<int>();
  if (j.contains("max_rounds")) c.max_rounds = j["max_rounds"].get<int>();
  if (j.contains("sc_samples")) c.sc_samples = j["sc_samples"].get<int>();
  if (j.contains("cot_style")) c.cot_style = j["cot_style"].get<bool>();
  if (j.contains("eot_confidence_across_agents")) {
    c.eot_confidence_across_agents = j["eot_confidence_across_agents"].get<bool>();
  }
  if (j.contains("judger_pinned_model") && !j["judger_pinned_model"].is_null()) {
    c.judger_pinned_model = j["judger_pinned_model"].get<std::string>();
  }
  return c;
}

PromptStyle apply_cot_style(const ProtocolConfig& cfg) {
  cfg.validate();
  if (cfg.kind == ProtocolKind::CoT || cfg.kind == ProtocolKind::SC) return PromptStyle::cot;
  if (cfg.cot_style) return PromptStyle::cot;
  return PromptStyle::direct;
}

nlohmann::json DebateRun::to_json() const {
  nlohmann::json j;
  j["question_id"] = question_id;
  j["config"] = config.to_json();
  nlohmann::json turns_json = nlohmann::json::array();
  for (const auto& t : turns) {
    turns_json.push_back({{"round", t.round},
                          {"agent", t.agent},
                          {"model_id", t.model_id},
                          {"request_digest", t.request_digest},
                          {"completion", t.completion},
                          {"answer", {{"kind", to_string(t.answer.kind)}, {"value", t.answer.value}}},
                          {"usage",
                           {{"prompt_tokens", t.usage.prompt_tokens},
                            {"completion_tokens", t.usage.completion_tokens},
                            {"llm_calls", t.usage.llm_calls}}}});
  }
  j["turns"] = turns_json;
  j["final"] = {{"kind", to_string(final_answer.kind)}, {"value", final_answer.value}};
  j["stop_reason"] = to_string(stop_reason);
  j["usage_total"] = {{"prompt_tokens", usage_total.prompt_tokens},
                      {"completion_tokens", usage_total.completion_tokens},
                      {"llm_calls", usage_total.llm_calls}};
  return j;
}

bool critic_agreed(const TurnRecord& turn) {
  return turn.completion.find("[Agree]") != std::string::npos;
}

namespace detail {

std::optional<JudgeVerdict> parse_judge_json(const std::string& text) {
  const auto open = text.find('{');
  const auto close = text.rfind('}');
  if (open == std::string::npos || close == std::string::npos || close <= open) {
    return std::nullopt;
  }
  nlohmann::json j = nlohmann::json::parse(text.substr(open, close - open + 1), nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  const char* kPreference = "Whether there is a preference";
  if (!j.contains(kPreference) || !j[kPreference].is_string()) return std::nullopt;

  auto lower = [](std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
  };
  JudgeVerdict v;
  v.preference = lower(j[kPreference].get<std::string>()).rfind("yes", 0) == 0;
  if (j.contains("Supported Side") && j["Supported Side"].is_string()) {
    v.supported_side = lower(j["Supported Side"].get<std::string>());
  }
  if (j.contains("debate_answer") && j["debate_answer"].is_string()) {
    v.debate_answer = j["debate_answer"].get<std::string>();
  }
  return v;
}

Answer answer_from_short_string(const std::string& s, Category category) {
  switch (category) {
    case Category::multiple_choice: {
      std::string t;
      for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
      }
      if (t.size() == 3 && ((t.front() == '(' && t.back() == ')') ||
                            (t.front() == '[' && t.back() == ']'))) {
        t = t.substr(1, 1);
      }
      if (t.size() == 1 && t[0] >= 'A' && t[0] <= 'J') return Answer::choice(t[0]);
      return extract_answer(s, category);
    }
    case Category::math: {
      Answer boxed = extract_boxed(s);
      if (!boxed.is_none()) return boxed;
      std::string n = normalize_math(s);
      return n.empty() ? Answer::none() : Answer::math(n);
    }
    case Category::programming:
      return extract_program(s);
  }
  return Answer::none();
}

std::optional<int> parse_correctness(const std::string& text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  const auto pos = lower.find("correctness");
  if (pos == std::string::npos) return std::nullopt;
  const auto eol = text.find('\n', pos);
  const auto end = eol == std::string::npos ? text.size() : eol;
  for (auto i = pos; i < end; ++i) {
    if (text[i] == '0') return 0;
    if (text[i] == '1') return 1;
  }
  return std::nullopt;
}

DebateRun run_sa(Ctx& ctx) {
  Transcript t{{Role::user, render_prompt(ctx.q, PromptStyle::direct, ctx.prompts)}};
  const TurnRecord& turn = ctx.take_turn(0, "agent0", t);
  return ctx.finish(turn.answer, StopReason::fixed_rounds);
}

DebateRun run_cot(Ctx& ctx) {
  Transcript t{{Role::user, render_prompt(ctx.q, PromptStyle::cot, ctx.prompts)}};
  const TurnRecord& turn = ctx.take_turn(0, "agent0", t);
  return ctx.finish(turn.answer, StopReason::fixed_rounds);
}

DebateRun run_sc(Ctx& ctx) {
  if (ctx.q.category == Category::programming) {
    throw UnsupportedCategoryError(
        "SC needs a single correct answer for majority voting; programming tasks are excluded");
  }
  const std::string prompt = render_prompt(ctx.q, PromptStyle::cot, ctx.prompts);
  Ballot ballot;
  for (int i = 0; i < ctx.cfg.sc_samples; ++i) {
    Transcript t{{Role::user, prompt}};
    const TurnRecord& turn = ctx.take_turn(0, "sample" + std::to_string(i), t);
    ballot.votes.emplace_back(turn.agent, turn.answer);
  }
  return ctx.finish(majority_vote(ballot).winner, StopReason::fixed_rounds);
}

}  // namespace detail

DebateRun run_protocol(const Question& q, const ProtocolConfig& cfg, Caller& caller,
                       const PromptLibrary& prompts, ProgramJudge* judge) {
  cfg.validate();
  detail::Ctx ctx(q, cfg, caller, prompts, judge);
  switch (cfg.kind) {
    case ProtocolKind::SA: return detail::run_sa(ctx);
    case ProtocolKind::CoT: return detail::run_cot(ctx);
    case ProtocolKind::SC: return detail::run_sc(ctx);
    case ProtocolKind::SoM: return detail::run_som(ctx);
    case ProtocolKind::MP: return detail::run_mp(ctx);
    case ProtocolKind::EoT: return detail::run_eot(ctx);
    case ProtocolKind::ChatEval: return detail::run_chateval(ctx);
    case ProtocolKind::AgentVerse: return detail::run_agentverse(ctx);
  }
  throw ConfigError("unhandled protocol kind");
}

namespace {

int last_round(const DebateRun& run) {
  int r = 0;
  for (const auto& t : run.turns) r = std::max(r, t.round);
  return r;
}

Answer majority_of_round(const DebateRun& run, int round) {
  Ballot b;
  for (const auto& t : run.turns) {
    if (t.round == round) b.votes.emplace_back(t.agent, t.answer);
  }
  if (b.votes.empty()) return Answer::none();
  return majority_vote(b).winner;
}

Answer reconstruct_mp(const DebateRun& run, Category category) {
  Answer last_affirmative = Answer::none();
  Answer last_judge_answer = Answer::none();
  for (size_t i = 0; i < run.turns.size(); ++i) {
    const TurnRecord& t = run.turns[i];
    if (t.agent == "affirmative") last_affirmative = t.answer;
    if (t.agent != "judge") continue;

    auto verdict = detail::parse_judge_json(t.completion);
    if (!verdict && i + 1 < run.turns.size() && run.turns[i + 1].agent == "judge_reask") {
      verdict = detail::parse_judge_json(run.turns[i + 1].completion);
    }
    if (!verdict) continue;  // two failures: treated as "No"
    Answer candidate = detail::answer_from_short_string(verdict->debate_answer, category);
    if (verdict->preference) {
      if (!candidate.is_none()) return candidate;
      // Judge chose a side but gave no usable answer string.
      if (verdict->supported_side.rfind("negative", 0) == 0) {
        Answer last_negative = Answer::none();
        for (size_t k = 0; k <= i; ++k) {
          if (run.turns[k].agent == "negative") last_negative = run.turns[k].answer;
        }
        return last_negative;
      }
      return last_affirmative;
    }
    if (!candidate.is_none()) last_judge_answer = candidate;
  }
  return last_judge_answer.is_none() ? last_affirmative : last_judge_answer;
}

Answer reconstruct_agentverse(const DebateRun& run) {
  Answer last_solver = Answer::none();
  for (const auto& t : run.turns) {
    if (t.agent == "solver") last_solver = t.answer;
    if (t.agent == "evaluator") {
      auto c = detail::parse_correctness(t.completion);
      if (c && *c == 1) return last_solver;
    }
  }
  return last_solver;
}

}  // namespace

Answer reconstruct_final(const DebateRun& run, Category category) {
  switch (run.config.kind) {
    case ProtocolKind::SA:
    case ProtocolKind::CoT:
      return run.turns.empty() ? Answer::none() : run.turns.back().answer;
    case ProtocolKind::SC: {
      Ballot b;
      for (const auto& t : run.turns) b.votes.emplace_back(t.agent, t.answer);
      if (b.votes.empty()) return Answer::none();
      return majority_vote(b).winner;
    }
    case ProtocolKind::SoM:
    case ProtocolKind::EoT:
      return majority_of_round(run, last_round(run));
    case ProtocolKind::ChatEval: {
      Ballot b;
      for (const auto& t : run.turns) {
        bool found = false;
        for (auto& [agent, answer] : b.votes) {
          if (agent == t.agent) {
            answer = t.answer;  // keep each role's last answer
            found = true;
          }
        }
        if (!found) b.votes.emplace_back(t.agent, t.answer);
      }
      if (b.votes.empty()) return Answer::none();
      return majority_vote(b).winner;
    }
    case ProtocolKind::MP:
      return reconstruct_mp(run, category);
    case ProtocolKind::AgentVerse:
      return reconstruct_agentverse(run);
  }
  return Answer::none();
}

}  // namespace madbench
