#pragma once

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace testutil {

struct CmdResult {
  int exit_code;
  std::string output;
};

// Runs the built binary through the shell, capturing stdout (stderr
// optionally merged in).
inline CmdResult run_cli(const std::string& args, bool merge_stderr = false) {
  const std::string cmd =
      std::string(GALLOC_BIN) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return CmdResult{-1, {}};
  std::string output;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), n);
  const int status = pclose(pipe);
  return CmdResult{WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

inline std::string data_file(const std::string& name) {
  return std::string(GALLOC_DATA_DIR) + "/" + name;
}

}  // namespace testutil
