#include <anthem/error.hpp>
#include <anthem/verify/verify.hpp>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <thread>

namespace anthem::verify {

namespace {

ClaimStatus claim_status(atp::ProverStatus status) {
  switch (status) {
  case atp::ProverStatus::Theorem:
    return ClaimStatus::Proven;
  case atp::ProverStatus::Timeout:
    return ClaimStatus::Timeout;
  case atp::ProverStatus::Error:
    return ClaimStatus::Error;
  default:
    return ClaimStatus::NotProven;
  }
}

bool settled(ClaimStatus status) { return status == ClaimStatus::Proven || status == ClaimStatus::Trivial; }

} // namespace

VerificationReport run_verification(Task &task, const atp::ProverConfig &config, const RunOptions &options) {
  std::vector<Claim> &claims = task.claims;
  VerificationReport report;
  report.entries.resize(claims.size());
  for (std::size_t i = 0; i < claims.size(); ++i)
    report.entries[i] = ReportEntry{claims[i].name, claims[i].direction, claims[i].status, 0, ""};

  if (!options.save_problems.empty()) {
    std::filesystem::create_directories(options.save_problems);
    for (const Claim &claim : claims) {
      atp::Problem problem = problem_for(task, claim);
      std::ofstream out(std::filesystem::path(options.save_problems) / (problem.name + ".p"));
      out << atp::emit_tptp(problem);
    }
  }

  bool needs_prover = std::any_of(claims.begin(), claims.end(),
                                  [](const Claim &claim) { return claim.status == ClaimStatus::Pending; });
  atp::ProverConfig resolved = config;
  if (needs_prover && !options.dry_run)
    resolved = atp::resolve(config);
  std::size_t workers = resolved.kind == atp::ProverKind::Z3 ? std::max(1u, resolved.cores) : 1;

  auto find = [&](const std::string &name, Direction direction) -> const Claim * {
    for (const Claim &claim : claims)
      if (claim.name == name && claim.direction == direction)
        return &claim;
    return nullptr;
  };

  std::mutex callback_mutex;
  auto finish = [&](std::size_t index, ClaimStatus status, double seconds, std::string detail) {
    claims[index].status = status;
    report.entries[index].status = status;
    report.entries[index].seconds = seconds;
    report.entries[index].detail = std::move(detail);
    if (options.on_result) {
      std::lock_guard lock(callback_mutex);
      options.on_result(report.entries[index]);
    }
  };

  for (std::size_t i = 0; i < claims.size(); ++i)
    if (claims[i].status == ClaimStatus::Trivial)
      finish(i, ClaimStatus::Trivial, 0, "");

  while (true) {
    std::vector<std::size_t> ready;
    for (std::size_t i = 0; i < claims.size(); ++i) {
      if (claims[i].status != ClaimStatus::Pending)
        continue;
      bool waiting = false;
      std::string failed;
      for (const std::string &name : claims[i].requires_claims) {
        const Claim *required = find(name, claims[i].direction);
        if (!required)
          continue;
        if (required->status == ClaimStatus::Pending)
          waiting = true;
        else if (!settled(required->status) && failed.empty())
          failed = name;
      }
      if (!failed.empty())
        finish(i, ClaimStatus::NotProven, 0, "depends on unproven claim " + failed);
      else if (!waiting)
        ready.push_back(i);
    }
    if (ready.empty())
      break;

    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t k = next++; k < ready.size(); k = next++) {
        std::size_t index = ready[k];
        if (options.dry_run) {
          finish(index, ClaimStatus::NotProven, 0, "prover not run");
          continue;
        }
        try {
          atp::ProverResult result = atp::run_prover(atp::emit_tptp(problem_for(task, claims[index])), resolved);
          finish(index, claim_status(result.status), result.seconds, std::string(atp::to_string(result.status)));
        } catch (const Error &error) {
          finish(index, ClaimStatus::Error, 0, error.what());
        }
      }
    };
    std::vector<std::thread> threads;
    for (std::size_t t = 1; t < std::min(workers, ready.size()); ++t)
      threads.emplace_back(work);
    work();
    for (std::thread &thread : threads)
      thread.join();
  }

  report.verdict = Verdict::Success;
  for (const ReportEntry &entry : report.entries) {
    if (entry.status == ClaimStatus::Error) {
      report.verdict = Verdict::Failure;
      break;
    }
    if (!settled(entry.status))
      report.verdict = Verdict::Inconclusive;
  }
  return report;
}

} // namespace anthem::verify
