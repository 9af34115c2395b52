// Shared driver for the golden-file CLI suite: runs every manifest command
// twice, byte-compares the runs against each other and the frozen golden
// output, and rejects any floating-point literal in a report.
#pragma once

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <ostream>
#include <regex>
#include <sstream>
#include <string>

struct CmdResult {
  std::string out;
  int status = -1;
};

inline CmdResult run_cmd(const std::string& cmd) {
  CmdResult r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

inline bool slurp_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::stringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

inline std::string substitute(std::string s, const std::string& key,
                              const std::string& value) {
  for (size_t pos; (pos = s.find(key)) != std::string::npos;)
    s.replace(pos, key.size(), value);
  return s;
}

// Manifest format: one case per line, "<golden-file> <shell args...>";
// "{DATA}" in the args expands to the data directory. Returns true when
// every case is reproducible, golden-identical, and float-free.
inline bool run_golden_suite(const std::string& cli,
                             const std::string& golden_dir,
                             const std::string& data_dir, std::ostream& log) {
  std::ifstream mf(golden_dir + "/manifest.txt");
  if (!mf) {
    log << "cannot open " << golden_dir << "/manifest.txt\n";
    return false;
  }
  const std::regex float_re("[0-9]\\.[0-9]");
  bool ok = true;
  int cases = 0;
  std::string line;
  while (std::getline(mf, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto sp = line.find(' ');
    const std::string name = line.substr(0, sp);
    const std::string args = substitute(line.substr(sp + 1), "{DATA}", data_dir);
    const std::string cmd = cli + " " + args + " 2>/dev/null";
    const CmdResult a = run_cmd(cmd);
    const CmdResult b = run_cmd(cmd);
    ++cases;
    if (a.status != 0) {
      log << name << ": exit code " << a.status << "\n" << a.out;
      ok = false;
      continue;
    }
    if (a.out != b.out) {
      log << name << ": two runs differ\n";
      ok = false;
    }
    std::string want;
    if (!slurp_file(golden_dir + "/" + name, want)) {
      log << name << ": missing golden file\n";
      ok = false;
    } else if (a.out != want) {
      log << name << ": output differs from golden file\n";
      ok = false;
    }
    if (std::regex_search(a.out, float_re)) {
      log << name << ": floating-point literal in report\n";
      ok = false;
    }
  }
  if (cases < 12) {
    log << "golden suite has only " << cases << " cases (needs >= 12)\n";
    ok = false;
  }
  return ok;
}
