#pragma once

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef COMMRING_CLI_PATH
#error "COMMRING_CLI_PATH must name the commring executable"
#endif

namespace harness {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

/// Runs the CLI with the given argument string. stderr is discarded unless
/// merge_stderr is set, in which case it is captured along with stdout.
inline RunResult run_cli(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string("\"") + COMMRING_CLI_PATH + "\" " + args +
                          (merge_stderr ? " 2>&1" : " 2>/dev/null");
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline void spit(const std::filesystem::path& p, const std::string& text) {
  std::ofstream(p, std::ios::binary) << text;
}

/// Fresh scratch directory under the system temp dir.
inline std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("commring_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

inline const char* kMalformedRing = "format_version 1\nlabel broken\norder 2\nadd\n0 1\n";

inline const char* kNonAssociativeRing =
    "format_version 1\nlabel bad\norder 3\nadd\n0 1 2\n1 2 0\n2 0 1\nmul\n0 0 0\n0 2 1\n0 0 0\n";

}  // namespace harness
