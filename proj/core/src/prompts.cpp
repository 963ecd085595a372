#include "madbench/prompts.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "madbench/errors.hpp"

namespace madbench {
namespace {

std::map<std::string, std::string> builtin_templates() {
  std::map<std::string, std::string> t;

  t["task_multiple_choice"] =
      R"(Instruction: Answer this multiple choice question. Generate your final answer by the answer is (X).

Q: {question}

A:)";

  t["task_math"] =
      R"(Instruction: Answer this question. Generate your final answer by the answer is $\boxed{ANSWER}$.

Q: {question}

A:)";

  t["task_programming"] =
      R"(Instruction: Write a python program to complete the following code. Do not output any example usage. Generate the final program by "The answer is: ```python".

Q: {question}

A:)";

  t["cot_elicitation"] = "Let's think step by step.";

  t["som_debate"] =
      R"(These are the solutions to the problem from other agents:

{solutions}

Use these opinions carefully as additional advice, can you provide an updated answer? Make sure to state your answer (capital multiple choice letter) at the end of the response.)";

  t["som_solution_slot"] = "One agent's solution: {solution}";

  t["eot_debate"] =
      R"(Here is a solution process from your friend:

{solutions}

Based on your friend's solution, carefully re-examine your previous answer. If your friend's confidence level is below 0.5, it suggests a high probability that the solution might be incorrect. Remember, solutions with high confidence can also be wrong. Utilize your talent and critical thinking to provide a new step-by-step solution process.

Provide the new solution directly, refrain from commenting on your friend's approach, and conclude by stating the answer.)";

  t["eot_solution_slot"] =
      "{name}'s solution: {solution}  {name}'s confidence in this solution is: {confidence}";

  t["eot_persona_kitty"] =
      R"(You are Kitty, a high school student admired for your attentiveness and detail-oriented nature. Your friends often rely on you to catch details they might have missed in their work. Your task is to carefully analyze the presented math problem, apply your attentive skills, and piece together a detailed solution. Afterward, you'll have the opportunity to review the solutions provided by your friends, offering insights and suggestions. Your careful revisions will help all of you to enhance your understanding and arrive at the most accurate solutions possible.)";

  t["eot_persona_ben"] =
      R"(You are Ben, a high school student with a track record of excellent grades, particularly in mathematics. Your friends admire your diligence and often seek your guidance in their studies. Your role is to scrutinize the problem at hand with your usual attention to detail, drawing from your vast knowledge of math principles. After considering your friends' approaches, carefully construct your answer, ensuring to clarify each step of your process. Your clear and logical explanations are valuable, as they will serve as a benchmark for your friends to compare and refine their own solutions.)";

  t["eot_persona_peter"] =
      R"(You are Peter, a high school student recognized for your unique problem-solving abilities. Your peers often turn to you for assistance when they encounter challenging tasks, as they appreciate your knack for devising creative solutions. Today, your challenge is to dissect the given math problem, leveraging your unique problem-solving strategies. Once you've crafted your solution, share it with your friends, Ben and Kitty, so they can see a different perspective. Your innovative approach will not only provide an answer but also inspire Ben and Kitty to think outside the box and possibly revise their own solutions.)";

  t["mp_affirmative"] =
      "You will now think step by step and provide an answer at the end of your response.";

  t["mp_negative"] = "You disagree with my answer. Provide your answer and reasons.";

  t["mp_judge"] =
      R"(You, as the moderator, will evaluate both sides' answers and determine if there is a clear preference for an answer candidate. If so, please summarize your reasons for supporting affirmative/negative side and give the final answer that you think is correct, and the debate will conclude. If not, the debate will continue to the next round. Now please output your answer in json format, with the format as follows: {"Whether there is a preference": "Yes or No", "Supported Side": "Affirmative or Negative", "Reason": "", "debate_answer": "the capital letter corresponding to the answer"}. Please strictly output in JSON format, do not output irrelevant content.)";

  t["chateval_general_public"] =
      R"(We would like to request your answer to this question.

There are a few other referee assigned the same task, it's your responsibility to discuss with them and think critically before you make your final judgement.

You are now General Public, one of the referees in this task. You are interested in the story and looking for updates on the investigation. Please think critically by yourself and note that it's your responsibility to answer the question.

Now it's your time to talk, please make your talk short and clear, General Public!)";

  t["chateval_critic"] =
      R"(We would like to request your answer to this question.

There are a few other referee assigned the same task, it's your responsibility to discuss with them and think critically before you make your final judgement.

You are now Critic, one of the referees in this task. Your job is to question others judgement to make sure their judgement is well-considered.

Now it's your time to talk, please make your talk short and clear, Critic!)";

  t["chateval_scientist"] =
      R"(We would like to request your answer to this question.

There are a few other referee assigned the same task, it's your responsibility to discuss with them and think critically before you make your final judgement.

You are Scientist, one of the referees in this task. You are a professional engaged in systematic study who possesses a strong background in the scientific method, critical thinking, and problem-solving abilities. Please help other people to answer the question.

Now it's your time to talk, please make your talk short and clear, Scientist!)";

  t["agentverse_role_assigner"] =
      R"(# Role Description

You are the leader of a group, now you are facing a problem:

{question}

You can recruit {cnt_critic_agents} people to solve the logic problem. What people will you recruit?

Here are some suggestion:
{advice}

Response Format Guidance

You should respond with a list of expert description. For example:

1. an electrical engineer specified in the filed of xxx.

2. an economist who is good at xxx.

3. a lawyer with a good knowledge of xxx.

...

Only respond with the description of each role. Do not include your reason.)";

  t["agentverse_solver"] =
      R"(Using these information, can you provide the correct solution to the problem? Explain your reasoning and solve the problem step by step. Your final answer should be a single capital letter, which is the lable of choice, in the form \boxed{answer}, at the end of your response.)";

  t["agentverse_critic"] =
      R"(You are in a discussion group, aiming to collaborative solve the following logic problem:

{question}

You are {role_description}. Based on your knowledge, can you check the correctness of the solutions given above? You should give your correct solution to the problem step by step. When responding, you should follow the following rules:

1. Double-check the above solutions, give your critics, then generate the correct solution step by step.

2. If the final answer in your solution is the same as the final answer in the above provided solution, end your response with a special token "[Agree]".

3. You must highlight your final answer in the form \boxed{answer} at the end of your response. The answer must be a single letter.

Now give your response.)";

  t["agentverse_evaluator"] =
      R"(Problem:

{question}

Solution:

{solution}

You are a logic problem lover. Above is a logic problem and a solution. Check whether the solution and the deduction is correct. If the deduction is wrong, you should explain why it is wrong, but do not give your solution. When it is correct, output a correctness of 1 and why it is correct.

You should respond in the following format:

Correctness: (0 or 1, 0 is wrong, and 1 is correct)

Response: (explain in details why it is wrong or correct. do not provide your solution))";

  return t;
}

bool placeholder_char(char c) {
  return std::islower(static_cast<unsigned char>(c)) ||
         std::isdigit(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

const PromptLibrary& PromptLibrary::builtin() {
  static const PromptLibrary lib = [] {
    PromptLibrary l;
    l.templates_ = builtin_templates();
    return l;
  }();
  return lib;
}

void PromptLibrary::load_overrides(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw ConfigError("prompt override directory not found: " + dir.string());
  }
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".txt") continue;
    const std::string name = entry.path().stem().string();
    if (!templates_.count(name)) {
      throw ConfigError("unknown prompt template override: " + name);
    }
    std::ifstream in(entry.path(), std::ios::binary);
    if (!in) throw ConfigError("cannot read prompt file: " + entry.path().string());
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    if (!text.empty() && text.back() == '\n') text.pop_back();  // EOF newline tolerated
    templates_[name] = std::move(text);
  }
}

const std::string& PromptLibrary::get(std::string_view name) const {
  auto it = templates_.find(std::string(name));
  if (it == templates_.end()) {
    throw ConfigError("unknown prompt template: " + std::string(name));
  }
  return it->second;
}

bool PromptLibrary::contains(std::string_view name) const {
  return templates_.count(std::string(name)) > 0;
}

std::vector<std::string> PromptLibrary::names() const {
  std::vector<std::string> out;
  for (const auto& [name, text] : templates_) out.push_back(name);
  return out;
}

std::string PromptLibrary::render(std::string_view tmpl,
                                  const std::map<std::string, std::string>& values) {
  std::string out;
  out.reserve(tmpl.size());
  size_t i = 0;
  while (i < tmpl.size()) {
    if (tmpl[i] != '{') {
      out.push_back(tmpl[i++]);
      continue;
    }
    size_t j = i + 1;
    while (j < tmpl.size() && placeholder_char(tmpl[j])) ++j;
    if (j < tmpl.size() && tmpl[j] == '}' && j > i + 1) {
      const std::string name(tmpl.substr(i + 1, j - i - 1));
      auto it = values.find(name);
      if (it != values.end()) {
        out += it->second;
        i = j + 1;
        continue;
      }
    }
    out.push_back(tmpl[i++]);
  }
  return out;
}

}  // namespace madbench
