#pragma once

#include <string>
#include <string_view>

namespace madbench {

enum class Category { multiple_choice, math, programming };

const char* to_string(Category c);
Category category_from_string(const std::string& s);

enum class AnswerKind { choice, math, program, none };

const char* to_string(AnswerKind k);
AnswerKind answer_kind_from_string(const std::string& s);

// A parsed final answer. `value` holds the choice label (single uppercase
// letter), the normalized math expression, or the program source. Absence
// of an answer is a value, not an error: it scores incorrect downstream.
struct Answer {
  AnswerKind kind = AnswerKind::none;
  std::string value;

  static Answer choice(char label);
  static Answer math(std::string normalized);
  static Answer program(std::string source);
  static Answer none() { return Answer{}; }

  bool is_none() const { return kind == AnswerKind::none; }
  bool operator==(const Answer&) const = default;  // structural, not semantic
};

// Trims whitespace, strips surrounding $ ... $, a \boxed{...} wrapper and a
// trailing period, repeating until stable.
std::string normalize_math(std::string_view raw);

// Last occurrence of case-insensitive "answer is" followed by an optionally
// parenthesized/bracketed/bolded capital letter A-J wins.
Answer extract_choice(std::string_view text);

// Content of the last balanced \boxed{...}; falls back to the text after the
// last "answer is" on that line.
Answer extract_boxed(std::string_view text);

// Content of the last ``` fenced code block (optional language tag).
Answer extract_program(std::string_view text);

// Category-appropriate extraction. Multiple choice additionally accepts a
// \boxed{X} single letter, which some debate roles are instructed to emit.
Answer extract_answer(std::string_view text, Category category);

// Semantic equality: choice labels match exactly; math compares normalized
// strings, then exact rationals, then decimals to 1e-6 relative; programs
// never compare equal; none equals nothing (including another none).
bool answers_equal(const Answer& a, const Answer& b);

}  // namespace madbench
