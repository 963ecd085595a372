#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace madbench {

// Named prompt templates with {placeholder} slots. The built-in set mirrors
// the text assets under assets/prompts/ one-to-one; per-run overrides are
// loaded from a directory of <name>.txt files.
class PromptLibrary {
 public:
  static const PromptLibrary& builtin();

  // Replaces or adds entries from <name>.txt files. Unknown names are
  // rejected so a typo cannot silently leave a template unused.
  void load_overrides(const std::filesystem::path& dir);

  const std::string& get(std::string_view name) const;  // throws ConfigError
  bool contains(std::string_view name) const;
  std::vector<std::string> names() const;

  // Substitutes {name} for every name present in `values`; anything else
  // (JSON braces, \boxed{answer}) is left verbatim.
  static std::string render(std::string_view tmpl,
                            const std::map<std::string, std::string>& values);

 private:
  std::map<std::string, std::string> templates_;
};

}  // namespace madbench
