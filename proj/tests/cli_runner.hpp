#pragma once

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace testing_support {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

/// Runs the command line tool through the shell, capturing stdout.
inline RunResult run_cli(const std::string& args, const std::string& stdin_text = {}) {
  std::string cmd = std::string(PADICMF_CLI) + " " + args + " 2>/dev/null";
  std::string tmp;
  if (!stdin_text.empty()) {
    char name[] = "/tmp/padicmf_inXXXXXX";
    const int fd = mkstemp(name);
    if (fd >= 0) {
      FILE* f = fdopen(fd, "w");
      std::fputs(stdin_text.c_str(), f);
      std::fclose(f);
      tmp = name;
      cmd += " < " + tmp;
    }
  }
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  if (!tmp.empty()) std::remove(tmp.c_str());
  return r;
}

}  // namespace testing_support
