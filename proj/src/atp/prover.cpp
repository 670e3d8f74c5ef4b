#include <anthem/atp/atp.hpp>
#include <anthem/error.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>

#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

namespace anthem::atp {

namespace {

namespace fs = std::filesystem;

std::optional<std::string> find_on_path(const std::string &name) {
  const char *path = std::getenv("PATH");
  if (!path)
    return std::nullopt;
  std::string entries(path);
  std::size_t start = 0;
  while (start <= entries.size()) {
    std::size_t end = entries.find(':', start);
    if (end == std::string::npos)
      end = entries.size();
    fs::path candidate = fs::path(entries.substr(start, end - start)) / name;
    if (::access(candidate.c_str(), X_OK) == 0 && fs::is_regular_file(candidate))
      return candidate.string();
    start = end + 1;
  }
  return std::nullopt;
}

std::optional<std::string> locate(const std::string &binary) {
  if (binary.find('/') != std::string::npos)
    return ::access(binary.c_str(), X_OK) == 0 ? std::optional<std::string>(binary) : std::nullopt;
  return find_on_path(binary);
}

// Removes the problem file when the run finishes.
struct TemporaryFile {
  fs::path path;
  ~TemporaryFile() {
    std::error_code ignored;
    fs::remove(path, ignored);
  }
};

TemporaryFile write_temporary(const std::string &text) {
  std::string pattern = (fs::temp_directory_path() / "anthem-XXXXXX.p").string();
  int fd = ::mkstemps(pattern.data(), 2);
  if (fd < 0)
    throw Error("cannot create a temporary problem file");
  ::close(fd);
  std::ofstream out(pattern);
  out << text;
  return TemporaryFile{pattern};
}

} // namespace

std::string_view to_string(ProverStatus status) {
  switch (status) {
  case ProverStatus::Theorem:
    return "Theorem";
  case ProverStatus::CounterSatisfiable:
    return "CounterSatisfiable";
  case ProverStatus::Timeout:
    return "Timeout";
  case ProverStatus::GaveUp:
    return "GaveUp";
  case ProverStatus::Error:
    return "Error";
  }
  return "Error";
}

std::optional<ProverStatus> parse_szs(std::string_view output) {
  static const std::regex line(R"(SZS status (\w+))");
  std::string text(output);
  std::smatch match;
  if (!std::regex_search(text, match, line))
    return std::nullopt;
  const std::string status = match[1];
  if (status == "Theorem" || status == "ContradictoryAxioms" || status == "Unsatisfiable")
    return ProverStatus::Theorem;
  if (status == "CounterSatisfiable" || status == "Satisfiable")
    return ProverStatus::CounterSatisfiable;
  if (status == "Timeout" || status == "ResourceOut")
    return ProverStatus::Timeout;
  if (status == "GaveUp" || status == "Unknown" || status == "Inappropriate" || status == "Incomplete")
    return ProverStatus::GaveUp;
  return ProverStatus::Error;
}

ProverConfig resolve(const ProverConfig &config) {
  ProverConfig resolved = config;
  if (resolved.time_limit < 1)
    resolved.time_limit = 1;
  if (resolved.cores < 1)
    resolved.cores = 1;

  std::optional<std::string> binary;
  if (!config.binary.empty()) {
    binary = locate(config.binary);
  } else if (const char *env = std::getenv("ANTHEM_PROVER"); env && *env) {
    binary = locate(env);
  } else if (config.kind == ProverKind::Z3) {
    binary = find_on_path("z3");
  } else {
    binary = find_on_path("vampire");
    if (!binary && config.kind == ProverKind::Auto)
      binary = find_on_path("z3");
  }
  if (!binary)
    throw ProverUnavailable("no theorem prover found; install vampire or z3, or set ANTHEM_PROVER");
  resolved.binary = *binary;
  if (resolved.kind == ProverKind::Auto)
    resolved.kind = fs::path(*binary).filename().string().find("z3") != std::string::npos ? ProverKind::Z3
                                                                                          : ProverKind::Vampire;
  return resolved;
}

std::vector<std::string> command_line(const ProverConfig &config) {
  std::vector<std::string> args{config.binary};
  if (config.kind == ProverKind::Z3) {
    args.push_back("-tptp");
    args.push_back("-T:" + std::to_string(config.time_limit));
  } else {
    args.insert(args.end(), {"--mode", "casc", "--time_limit", std::to_string(config.time_limit), "--cores",
                             std::to_string(config.cores)});
  }
  args.insert(args.end(), config.extra_flags.begin(), config.extra_flags.end());
  return args;
}

ProverResult run_prover(const std::string &problem_text, const ProverConfig &config) {
  ProverConfig resolved = config.binary.empty() || config.kind == ProverKind::Auto ? resolve(config) : config;
  TemporaryFile problem = write_temporary(problem_text);
  std::vector<std::string> args = command_line(resolved);
  args.push_back(problem.path.string());

  int pipe_fds[2];
  if (::pipe(pipe_fds) != 0)
    throw Error("cannot create a pipe for the prover");

  auto start = std::chrono::steady_clock::now();
  pid_t pid = ::fork();
  if (pid < 0)
    throw Error("cannot fork the prover process");
  if (pid == 0) {
    ::dup2(pipe_fds[1], STDOUT_FILENO);
    ::dup2(pipe_fds[1], STDERR_FILENO);
    ::close(pipe_fds[0]);
    ::close(pipe_fds[1]);
    std::vector<char *> argv;
    for (std::string &arg : args)
      argv.push_back(arg.data());
    argv.push_back(nullptr);
    ::execv(argv[0], argv.data());
    ::_exit(127);
  }
  ::close(pipe_fds[1]);

  // The prover enforces its own limit; the grace period only catches hangs.
  auto deadline = start + std::chrono::seconds(resolved.time_limit + 5);
  ProverResult result;
  bool killed = false;
  char buffer[4096];
  while (true) {
    auto remaining =
        std::chrono::duration_cast<std::chrono::milliseconds>(deadline - std::chrono::steady_clock::now()).count();
    if (remaining <= 0) {
      ::kill(pid, SIGKILL);
      killed = true;
      break;
    }
    pollfd descriptor{pipe_fds[0], POLLIN, 0};
    int ready = ::poll(&descriptor, 1, static_cast<int>(std::min<long long>(remaining, 1000)));
    if (ready < 0 && errno != EINTR)
      break;
    if (ready <= 0)
      continue;
    ssize_t count = ::read(pipe_fds[0], buffer, sizeof buffer);
    if (count <= 0)
      break;
    result.output.append(buffer, static_cast<std::size_t>(count));
  }
  ::close(pipe_fds[0]);
  int status = 0;
  ::waitpid(pid, &status, 0);
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (!killed && WIFEXITED(status) && WEXITSTATUS(status) == 127 && result.output.empty())
    throw ProverUnavailable("cannot start prover `" + resolved.binary + "`");

  if (auto parsed = parse_szs(result.output))
    result.status = *parsed;
  else if (killed || result.seconds >= resolved.time_limit)
    result.status = ProverStatus::Timeout;
  else
    result.status = ProverStatus::Error;
  return result;
}

} // namespace anthem::atp
