#include <cctype>
#include <iostream>

#include "detail.hpp"

namespace madbench::detail {
namespace {

// "1. an expert ..." lines from the role assigner, topped up with a generic
// expert when the reply is short or unparseable.
std::vector<std::string> parse_roles(const std::string& text, int count) {
  std::vector<std::string> roles;
  size_t pos = 0;
  while (pos < text.size() && static_cast<int>(roles.size()) < count) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    std::string_view line(text.data() + pos, eol - pos);
    size_t i = 0;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    size_t digits = i;
    while (digits < line.size() && std::isdigit(static_cast<unsigned char>(line[digits]))) {
      ++digits;
    }
    if (digits > i && digits < line.size() && (line[digits] == '.' || line[digits] == ')')) {
      size_t body = digits + 1;
      while (body < line.size() && std::isspace(static_cast<unsigned char>(line[body]))) ++body;
      if (body < line.size()) roles.emplace_back(line.substr(body));
    }
    pos = eol + 1;
  }
  while (static_cast<int>(roles.size()) < count) {
    roles.emplace_back("an expert in general problem solving");
  }
  return roles;
}

}  // namespace

// One cycle: role assigner recruits the critics, the solver drafts, critics
// check (appending "[Agree]" when they concur), the evaluator accepts or
// sends the group into another cycle. Programming questions surface the
// program judge's verdict to the evaluator.
DebateRun run_agentverse(Ctx& ctx) {
  const int critics = ctx.cfg.num_agents;
  const std::string problem = question_block(ctx.q);
  const std::string task = render_prompt(ctx.q, PromptStyle::direct, ctx.prompts);

  Answer solver_answer = Answer::none();
  for (int cycle = 0; cycle < ctx.cfg.max_rounds; ++cycle) {
    const std::string assigner_request =
        PromptLibrary::render(ctx.prompts.get("agentverse_role_assigner"),
                              {{"question", problem},
                               {"cnt_critic_agents", std::to_string(critics)},
                               {"advice", ""}});
    Transcript at{{Role::user, assigner_request}};
    const TurnRecord& assigner_turn = ctx.take_turn(cycle, "role_assigner", at);
    const std::vector<std::string> roles = parse_roles(assigner_turn.completion, critics);

    std::string solver_request = task + "\n\nRecruited experts:";
    for (size_t i = 0; i < roles.size(); ++i) {
      solver_request += "\n" + std::to_string(i + 1) + ". " + roles[i];
    }
    solver_request += "\n\n" + ctx.prompts.get("agentverse_solver");
    Transcript st{{Role::user, solver_request}};
    const TurnRecord& solver_turn = ctx.take_turn(cycle, "solver", st);
    solver_answer = solver_turn.answer;

    for (int i = 0; i < critics; ++i) {
      const std::string critic_request =
          "Solver's solution:\n" + solver_turn.completion + "\n\n" +
          PromptLibrary::render(ctx.prompts.get("agentverse_critic"),
                                {{"question", problem}, {"role_description", roles[i]}});
      Transcript crt{{Role::user, critic_request}};
      ctx.take_turn(cycle, "critic" + std::to_string(i), crt);
    }

    std::string solution_context = solver_turn.completion;
    if (ctx.q.category == Category::programming && ctx.judge != nullptr &&
        solver_turn.answer.kind == AnswerKind::program) {
      ProgramVerdict verdict = ctx.judge->submit(solver_turn.answer.value, ctx.q.tests);
      solution_context += "\n\nExecution result: ";
      solution_context += verdict.pass ? "PASS" : "FAIL";
      if (!verdict.log.empty()) solution_context += "\n" + verdict.log;
    }
    const std::string evaluator_request =
        PromptLibrary::render(ctx.prompts.get("agentverse_evaluator"),
                              {{"question", problem}, {"solution", solution_context}});
    Transcript et{{Role::user, evaluator_request}};
    const TurnRecord& evaluator_turn = ctx.take_turn(cycle, "evaluator", et, /*judger_role=*/true);

    auto correctness = parse_correctness(evaluator_turn.completion);
    if (!correctness) {
      std::cerr << "[madbench] warning: evaluator reply for " << ctx.q.id
                << " has no Correctness line; treating as 0\n";
    }
    if (correctness && *correctness == 1) {
      return ctx.finish(solver_answer, StopReason::evaluator_accept);
    }
  }
  return ctx.finish(solver_answer, StopReason::max_rounds);
}

}  // namespace madbench::detail
