#include "madbench/extract.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <utility>
#include <vector>

#include "madbench/errors.hpp"

namespace madbench {
namespace {

bool is_upper_choice(char c) { return c >= 'A' && c <= 'J'; }

char to_lower_ascii(char c) {
  return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), to_lower_ascii);
  return out;
}

std::string_view trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

// Positions of every case-insensitive "answer is" in `text`.
std::vector<size_t> answer_is_positions(std::string_view text) {
  static constexpr std::string_view kNeedle = "answer is";
  std::string lower = lowercase(text);
  std::vector<size_t> out;
  size_t pos = 0;
  while ((pos = lower.find(kNeedle, pos)) != std::string::npos) {
    out.push_back(pos);
    pos += 1;
  }
  return out;
}

// Whole string is a balanced \boxed{...}; returns the inner content.
std::optional<std::string_view> strip_boxed(std::string_view s) {
  size_t i = 0;
  while (i < s.size() && s[i] == '\\') ++i;
  if (i == 0) return std::nullopt;
  static constexpr std::string_view kBoxed = "boxed{";
  if (s.substr(i, kBoxed.size()) != kBoxed) return std::nullopt;
  size_t start = i + kBoxed.size();
  int depth = 1;
  for (size_t j = start; j < s.size(); ++j) {
    if (s[j] == '{') ++depth;
    if (s[j] == '}') {
      --depth;
      if (depth == 0) {
        if (j + 1 != s.size()) return std::nullopt;  // trailing junk
        return s.substr(start, j - start);
      }
    }
  }
  return std::nullopt;
}

struct Rational {
  __int128 num = 0;
  __int128 den = 1;
};

// Keeps cross-multiplied comparisons well inside __int128 range.
constexpr __int128 kMagnitudeCap = static_cast<__int128>(1000000000000000000LL);

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a == 0 ? 1 : a;
}

// Parses a plain decimal ("42", "-0.5", ".25") into an exact rational.
// Caps significant digits at 18 so cross-multiplied comparisons fit in
// __int128 comfortably; longer inputs fall through to the double path.
std::optional<Rational> parse_decimal(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  bool neg = false;
  size_t i = 0;
  if (s[i] == '+' || s[i] == '-') {
    neg = s[i] == '-';
    ++i;
  }
  __int128 digits = 0;
  int ndigits = 0;
  bool any = false, seen_nonzero = false;
  __int128 den = 1;
  bool in_frac = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c == '.') {
      if (in_frac) return std::nullopt;
      in_frac = true;
      continue;
    }
    if (c < '0' || c > '9') return std::nullopt;
    any = true;
    if (c != '0') seen_nonzero = true;
    if (seen_nonzero || c != '0' || in_frac) {
      if (ndigits >= 18) return std::nullopt;
      digits = digits * 10 + (c - '0');
      if (seen_nonzero) ++ndigits;
    }
    if (in_frac) {
      den *= 10;
      if (den > kMagnitudeCap) return std::nullopt;
    }
  }
  if (!any) return std::nullopt;
  Rational r;
  r.num = neg ? -digits : digits;
  r.den = den;
  __int128 g = gcd128(r.num, r.den);
  r.num /= g;
  r.den /= g;
  return r;
}

// Decimal or a/b fraction of decimals.
std::optional<Rational> parse_rational(std::string_view s) {
  s = trim(s);
  size_t slash = s.find('/');
  if (slash == std::string_view::npos) return parse_decimal(s);
  auto a = parse_decimal(s.substr(0, slash));
  auto b = parse_decimal(s.substr(slash + 1));
  if (!a || !b || b->num == 0) return std::nullopt;
  Rational r;
  r.num = a->num * b->den;
  r.den = a->den * b->num;
  if (r.den < 0) {
    r.num = -r.num;
    r.den = -r.den;
  }
  __int128 g = gcd128(r.num, r.den);
  r.num /= g;
  r.den /= g;
  if (r.num > kMagnitudeCap || -r.num > kMagnitudeCap || r.den > kMagnitudeCap) {
    return std::nullopt;
  }
  return r;
}

std::optional<double> parse_double(std::string_view s) {
  std::string buf(trim(s));
  if (buf.empty()) return std::nullopt;
  char* end = nullptr;
  double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size()) return std::nullopt;
  if (!std::isfinite(v)) return std::nullopt;
  return v;
}

}  // namespace

const char* to_string(Category c) {
  switch (c) {
    case Category::multiple_choice: return "multiple_choice";
    case Category::math: return "math";
    case Category::programming: return "programming";
  }
  return "multiple_choice";
}

Category category_from_string(const std::string& s) {
  if (s == "multiple_choice") return Category::multiple_choice;
  if (s == "math") return Category::math;
  if (s == "programming") return Category::programming;
  throw ConfigError("unknown category: " + s);
}

const char* to_string(AnswerKind k) {
  switch (k) {
    case AnswerKind::choice: return "choice";
    case AnswerKind::math: return "math";
    case AnswerKind::program: return "program";
    case AnswerKind::none: return "none";
  }
  return "none";
}

AnswerKind answer_kind_from_string(const std::string& s) {
  if (s == "choice") return AnswerKind::choice;
  if (s == "math") return AnswerKind::math;
  if (s == "program") return AnswerKind::program;
  if (s == "none") return AnswerKind::none;
  throw ConfigError("unknown answer kind: " + s);
}

Answer Answer::choice(char label) {
  Answer a;
  a.kind = AnswerKind::choice;
  a.value = std::string(1, label);
  return a;
}

Answer Answer::math(std::string normalized) {
  Answer a;
  a.kind = AnswerKind::math;
  a.value = std::move(normalized);
  return a;
}

Answer Answer::program(std::string source) {
  Answer a;
  a.kind = AnswerKind::program;
  a.value = std::move(source);
  return a;
}

std::string normalize_math(std::string_view raw) {
  std::string_view v = trim(raw);
  for (;;) {
    std::string_view before = v;
    if (v.size() >= 2 && v.front() == '$' && v.back() == '$') v = trim(v.substr(1, v.size() - 2));
    if (auto inner = strip_boxed(v)) v = trim(*inner);
    if (!v.empty() && v.back() == '.') v = trim(v.substr(0, v.size() - 1));
    if (v == before) break;
  }
  return std::string(v);
}

Answer extract_choice(std::string_view text) {
  Answer found = Answer::none();
  for (size_t pos : answer_is_positions(text)) {
    size_t i = pos + 9;  // past "answer is"
    while (i < text.size() && (text[i] == ' ' || text[i] == ':')) ++i;
    if (i >= text.size()) continue;

    char open = 0;
    int stars = 0;
    if (text[i] == '(' || text[i] == '[') {
      open = text[i];
      ++i;
    } else {
      while (i < text.size() && text[i] == '*' && stars < 2) {
        ++stars;
        ++i;
      }
    }
    while (i < text.size() && text[i] == ' ') ++i;
    if (i >= text.size() || !is_upper_choice(text[i])) continue;
    char letter = text[i];
    size_t j = i + 1;
    while (j < text.size() && text[j] == ' ') ++j;
    if (open == '(') {
      if (j >= text.size() || text[j] != ')') continue;
    } else if (open == '[') {
      if (j >= text.size() || text[j] != ']') continue;
    } else if (stars > 0) {
      int closing = 0;
      while (j < text.size() && text[j] == '*' && closing < stars) {
        ++closing;
        ++j;
      }
      if (closing != stars) continue;
    } else {
      // bare letter needs a word boundary
      if (j == i + 1 && j < text.size() &&
          std::isalnum(static_cast<unsigned char>(text[j]))) {
        continue;
      }
    }
    found = Answer::choice(letter);
  }
  return found;
}

Answer extract_boxed(std::string_view text) {
  static constexpr std::string_view kNeedle = "boxed{";
  std::string best;
  bool have = false;
  size_t pos = 0;
  while ((pos = text.find(kNeedle, pos)) != std::string::npos) {
    if (pos == 0 || text[pos - 1] != '\\') {
      pos += 1;
      continue;
    }
    size_t start = pos + kNeedle.size();
    int depth = 1;
    for (size_t j = start; j < text.size(); ++j) {
      if (text[j] == '{') ++depth;
      if (text[j] == '}') {
        --depth;
        if (depth == 0) {
          std::string content = normalize_math(text.substr(start, j - start));
          if (!content.empty()) {
            best = std::move(content);
            have = true;
          }
          break;
        }
      }
    }
    pos += 1;
  }
  if (have) return Answer::math(best);

  // Fallback: text after the last "answer is", up to end of line.
  auto positions = answer_is_positions(text);
  for (auto it = positions.rbegin(); it != positions.rend(); ++it) {
    size_t i = *it + 9;
    while (i < text.size() && (text[i] == ' ' || text[i] == ':')) ++i;
    size_t eol = text.find('\n', i);
    std::string_view tail = text.substr(i, eol == std::string_view::npos ? std::string_view::npos : eol - i);
    std::string norm = normalize_math(tail);
    if (!norm.empty()) return Answer::math(norm);
  }
  return Answer::none();
}

Answer extract_program(std::string_view text) {
  static constexpr std::string_view kFence = "```";
  std::vector<size_t> fences;
  size_t pos = 0;
  while ((pos = text.find(kFence, pos)) != std::string::npos) {
    fences.push_back(pos);
    pos += kFence.size();
  }
  if (fences.empty()) return Answer::none();

  size_t open, close;
  if (fences.size() % 2 == 0) {
    open = fences[fences.size() - 2];
    close = fences.back();
  } else {
    open = fences.back();  // unterminated final block: take to end of text
    close = text.size();
  }

  size_t body = open + kFence.size();
  size_t eol = text.find('\n', body);
  if (eol != std::string_view::npos && eol < close) {
    std::string_view tag = trim(text.substr(body, eol - body));
    bool tag_like = std::all_of(tag.begin(), tag.end(), [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '+' ||
             c == '-' || c == '.' || c == '#';
    });
    if (tag_like) body = eol + 1;
  }
  if (body > close) body = close;
  std::string_view content = text.substr(body, close - body);
  if (!content.empty() && content.back() == '\n') content.remove_suffix(1);
  return Answer::program(std::string(content));
}

Answer extract_answer(std::string_view text, Category category) {
  switch (category) {
    case Category::multiple_choice: {
      Answer a = extract_choice(text);
      if (!a.is_none()) return a;
      Answer boxed = extract_boxed(text);
      if (boxed.kind == AnswerKind::math) {
        std::string_view v = boxed.value;
        if (v.size() == 3 && v.front() == '(' && v.back() == ')') v = v.substr(1, 1);
        if (v.size() == 1 && is_upper_choice(v[0])) return Answer::choice(v[0]);
      }
      return Answer::none();
    }
    case Category::math:
      return extract_boxed(text);
    case Category::programming:
      return extract_program(text);
  }
  return Answer::none();
}

bool answers_equal(const Answer& a, const Answer& b) {
  if (a.is_none() || b.is_none()) return false;
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case AnswerKind::choice:
      return a.value == b.value;
    case AnswerKind::program:
      return false;  // free-form programs never vote
    case AnswerKind::math: {
      std::string na = normalize_math(a.value);
      std::string nb = normalize_math(b.value);
      if (na == nb) return !na.empty();
      auto ra = parse_rational(na);
      auto rb = parse_rational(nb);
      if (ra && rb) return ra->num * rb->den == rb->num * ra->den;
      auto da = parse_double(na);
      auto db = parse_double(nb);
      if (da && db) {
        double scale = std::max(std::fabs(*da), std::fabs(*db));
        if (scale == 0.0) return true;
        return std::fabs(*da - *db) <= 1e-6 * scale;
      }
      return false;
    }
    case AnswerKind::none:
      return false;
  }
  return false;
}

}  // namespace madbench
