#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "madbench/extract.hpp"
#include "madbench/prompts.hpp"

namespace madbench {

struct Choice {
  std::string label;  // single uppercase letter A-J
  std::string text;
};

struct Question {
  std::string id;
  Category category = Category::multiple_choice;
  std::string text;             // question body / programming prompt
  std::vector<Choice> choices;  // multiple choice only
  Answer gold;
  std::string entry_point;  // programming only
  std::string tests;        // programming reference tests
  std::map<std::string, std::string> metadata;

  nlohmann::json to_json() const;
};

// One JSON object per line. Schemas by category:
//   multiple_choice: {"id","question","choices":[{"label","text"}...],"answer"}
//   math:            {"id","question","answer"}
//   programming:     {"id","prompt","entry_point","tests"}
// Labels are uppercased on load; schema violations report the line number;
// duplicate ids are rejected.
std::vector<Question> load_dataset(const std::filesystem::path& path, Category category);

Question question_from_json(const nlohmann::json& j, Category category);

void save_dataset(const std::filesystem::path& path, const std::vector<Question>& questions);

enum class PromptStyle { direct, cot };

// Question text plus lettered choice lines; what templates interpolate as
// the problem statement.
std::string question_block(const Question& q);

// Category template with the question (and lettered choices) interpolated,
// plus the style-specific completion lead-in.
std::string render_prompt(const Question& q, PromptStyle style, const PromptLibrary& prompts);

// Deterministic sample of k questions without replacement, original order
// preserved. k >= size returns everything.
std::vector<Question> sample_subset(const std::vector<Question>& questions, std::size_t k,
                                    std::uint64_t seed);

}  // namespace madbench
