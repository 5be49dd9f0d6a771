#pragma once

#include <sys/wait.h>

#include <cstdio>
#include <string>
#include <vector>

namespace natsu2::testkit {

struct ProcessResult {
  int exit_code = -1;
  std::string out;
};

/// Runs the natsu2 executable with the given arguments, capturing stdout.
inline ProcessResult run_cli(const std::vector<std::string>& args) {
  std::string cmd = "'" NATSU2_CLI_PATH "'";
  for (const auto& a : args) cmd += " '" + a + "'";
  cmd += " 2>/dev/null";
  ProcessResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  return r;
}

}  // namespace natsu2::testkit
