#include <unistd.h>

#include <array>
#include <atomic>
#include <cstdio>
#include <fstream>

#include "madbench/errors.hpp"
#include "madbench/protocols.hpp"

namespace madbench {
namespace {

std::filesystem::path write_temp(const std::string& stem, const std::string& content) {
  static std::atomic<unsigned> counter{0};
  auto path = std::filesystem::temp_directory_path() /
              ("madbench_" + stem + "_" + std::to_string(::getpid()) + "_" +
               std::to_string(counter.fetch_add(1)) + ".tmp");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write temp file: " + path.string());
  out << content;
  return path;
}

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out.push_back(c);
    }
  }
  out += "'";
  return out;
}

}  // namespace

CommandProgramJudge::CommandProgramJudge(std::string command) : command_(std::move(command)) {
  if (command_.empty()) throw ConfigError("program judge command is empty");
}

ProgramVerdict CommandProgramJudge::submit(const std::string& program,
                                           const std::string& tests) {
  const auto program_path = write_temp("program", program);
  const auto tests_path = write_temp("tests", tests);
  const std::string cmdline = command_ + " " + shell_quote(program_path.string()) + " " +
                              shell_quote(tests_path.string()) + " 2>&1";

  ProgramVerdict verdict;
  FILE* pipe = ::popen(cmdline.c_str(), "r");
  if (pipe == nullptr) {
    std::filesystem::remove(program_path);
    std::filesystem::remove(tests_path);
    throw Error("program judge: popen failed for: " + command_);
  }
  std::array<char, 4096> buf;
  size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    verdict.log.append(buf.data(), n);
  }
  const int status = ::pclose(pipe);
  std::filesystem::remove(program_path);
  std::filesystem::remove(tests_path);
  verdict.pass = status == 0;
  return verdict;
}

}  // namespace madbench
