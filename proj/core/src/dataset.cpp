#include "madbench/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <set>

#include "madbench/errors.hpp"
#include "madbench/router.hpp"

namespace madbench {
namespace {

[[noreturn]] void schema_fail(int line, const std::string& why) {
  throw SchemaError("line " + std::to_string(line) + ": " + why);
}

std::string require_string(const nlohmann::json& j, const char* key, int line) {
  if (!j.contains(key) || !j[key].is_string()) {
    schema_fail(line, std::string("missing or non-string field \"") + key + "\"");
  }
  return j[key].get<std::string>();
}

std::string normalize_label(std::string label, int line) {
  if (label.size() != 1) schema_fail(line, "choice label must be a single letter: " + label);
  char c = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
  if (c < 'A' || c > 'J') schema_fail(line, "choice label out of A-J range: " + label);
  return std::string(1, c);
}

Question parse_line(const nlohmann::json& j, Category category, int line) {
  Question q;
  q.category = category;
  q.id = require_string(j, "id", line);
  if (q.id.empty()) schema_fail(line, "empty id");

  switch (category) {
    case Category::multiple_choice: {
      q.text = require_string(j, "question", line);
      if (!j.contains("choices") || !j["choices"].is_array() || j["choices"].size() < 2) {
        schema_fail(line, "multiple_choice requires >= 2 choices");
      }
      std::set<std::string> labels;
      for (const auto& c : j["choices"]) {
        Choice choice;
        choice.label = normalize_label(require_string(c, "label", line), line);
        choice.text = require_string(c, "text", line);
        if (!labels.insert(choice.label).second) {
          schema_fail(line, "duplicate choice label " + choice.label);
        }
        q.choices.push_back(std::move(choice));
      }
      std::string gold = normalize_label(require_string(j, "answer", line), line);
      if (!labels.count(gold)) schema_fail(line, "gold label " + gold + " not among choices");
      q.gold = Answer::choice(gold[0]);
      break;
    }
    case Category::math: {
      q.text = require_string(j, "question", line);
      std::string gold = normalize_math(require_string(j, "answer", line));
      if (gold.empty()) schema_fail(line, "empty math answer");
      q.gold = Answer::math(gold);
      break;
    }
    case Category::programming: {
      q.text = require_string(j, "prompt", line);
      q.entry_point = require_string(j, "entry_point", line);
      q.tests = require_string(j, "tests", line);
      if (q.tests.empty()) schema_fail(line, "empty tests");
      q.gold = Answer::program(q.tests);
      break;
    }
  }
  if (j.contains("metadata")) {
    if (!j["metadata"].is_object()) schema_fail(line, "metadata must be an object");
    for (const auto& [k, v] : j["metadata"].items()) {
      if (!v.is_string()) schema_fail(line, "metadata values must be strings");
      q.metadata[k] = v.get<std::string>();
    }
  }
  return q;
}

}  // namespace

nlohmann::json Question::to_json() const {
  nlohmann::json j;
  j["id"] = id;
  switch (category) {
    case Category::multiple_choice: {
      j["question"] = text;
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& c : choices) arr.push_back({{"label", c.label}, {"text", c.text}});
      j["choices"] = arr;
      j["answer"] = gold.value;
      break;
    }
    case Category::math:
      j["question"] = text;
      j["answer"] = gold.value;
      break;
    case Category::programming:
      j["prompt"] = text;
      j["entry_point"] = entry_point;
      j["tests"] = tests;
      break;
  }
  if (!metadata.empty()) j["metadata"] = metadata;
  return j;
}

Question question_from_json(const nlohmann::json& j, Category category) {
  return parse_line(j, category, 0);
}

std::vector<Question> load_dataset(const std::filesystem::path& path, Category category) {
  std::ifstream in(path);
  if (!in) throw ConfigError("dataset file not found: " + path.string());

  std::vector<Question> out;
  std::set<std::string> ids;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded()) schema_fail(lineno, "invalid JSON");
    Question q = parse_line(j, category, lineno);
    if (!ids.insert(q.id).second) schema_fail(lineno, "duplicate id " + q.id);
    out.push_back(std::move(q));
  }
  return out;
}

void save_dataset(const std::filesystem::path& path, const std::vector<Question>& questions) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write dataset: " + path.string());
  for (const auto& q : questions) out << q.to_json().dump() << '\n';
}

std::string question_block(const Question& q) {
  std::string body = q.text;
  if (q.category == Category::multiple_choice) {
    for (const auto& c : q.choices) {
      body += "\n" + c.label + ": " + c.text;
    }
  }
  return body;
}

std::string render_prompt(const Question& q, PromptStyle style, const PromptLibrary& prompts) {
  std::string body = question_block(q);
  const char* tmpl_name = nullptr;
  switch (q.category) {
    case Category::multiple_choice: tmpl_name = "task_multiple_choice"; break;
    case Category::math: tmpl_name = "task_math"; break;
    case Category::programming: tmpl_name = "task_programming"; break;
  }
  std::string rendered = PromptLibrary::render(prompts.get(tmpl_name), {{"question", body}});
  if (style == PromptStyle::cot) {
    rendered += " " + prompts.get("cot_elicitation");
  } else if (q.category != Category::programming) {
    rendered += " The answer is";
  }
  return rendered;
}

std::vector<Question> sample_subset(const std::vector<Question>& questions, std::size_t k,
                                    std::uint64_t seed) {
  if (k >= questions.size()) return questions;
  std::vector<std::size_t> idx(questions.size());
  std::iota(idx.begin(), idx.end(), 0);
  RngStream rng(seed, "subset", 0);
  for (std::size_t i = 0; i < k; ++i) {  // partial Fisher-Yates
    std::size_t j = i + static_cast<std::size_t>(rng.next_u64() % (idx.size() - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(k);
  std::sort(idx.begin(), idx.end());  // keep original order
  std::vector<Question> out;
  out.reserve(k);
  for (std::size_t i : idx) out.push_back(questions[i]);
  return out;
}

}  // namespace madbench
