#include <anthem/analyze/analyze.hpp>
#include <anthem/asp/syntax.hpp>
#include <anthem/control/control.hpp>
#include <anthem/error.hpp>
#include <anthem/fol/io.hpp>
#include <anthem/fol/operations.hpp>
#include <anthem/transform/transform.hpp>
#include <anthem/translate/translate.hpp>
#include <anthem/verify/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using namespace anthem;
namespace fs = std::filesystem;

constexpr int kSuccess = 0;
constexpr int kInconclusive = 1;
constexpr int kError = 2;
constexpr int kRefused = 3;

std::string read_input(const std::string &path) {
  std::ostringstream buffer;
  if (path.empty() || path == "-") {
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in)
    throw Error("cannot read `" + path + "`");
  buffer << in.rdbuf();
  return buffer.str();
}

int translate_command(const std::string &input, const std::string &with) {
  auto kind = translate::parse_translation_kind(with);
  if (!kind)
    throw Error("unknown translation `" + with + "`");
  std::string text = read_input(input);
  fol::Theory theory;
  switch (*kind) {
  case translate::TranslationKind::TauStar:
    theory = translate::tau_star(asp::parse_program(text));
    break;
  case translate::TranslationKind::Natural:
    theory = translate::natural(asp::parse_program(text));
    break;
  case translate::TranslationKind::Mu:
    theory = translate::mu(asp::parse_program(text));
    break;
  case translate::TranslationKind::Completion:
    theory = transform::completion(fol::parse_theory(text));
    break;
  case translate::TranslationKind::Gamma: {
    fol::Theory parsed = fol::parse_theory(text);
    transform::HereThereNaming naming(fol::predicates(parsed));
    for (const std::string &warning : naming.warnings())
      std::cerr << "warning: " << warning << "\n";
    theory = transform::gamma(parsed, naming);
    break;
  }
  }
  std::cout << fol::format_default(theory);
  return kSuccess;
}

int analyze_command(const std::string &input, const std::string &property) {
  asp::Program program = asp::parse_program(read_input(input));
  analyze::AnalysisReport report;
  std::string holds;
  std::string fails;
  if (property == "tightness") {
    report = analyze::check_tightness(program);
    holds = "tight";
    fails = "not tight";
  } else if (property == "regularity") {
    report = analyze::check_regularity(program);
    holds = "regular";
    fails = "not regular";
  } else {
    throw Error("unknown property `" + property + "`");
  }
  std::cout << (report.verdict ? holds : fails) << "\n";
  if (!report.verdict && !report.witness.empty()) {
    std::cout << (property == "tightness" ? "positive cycle: " : "rule: ");
    for (std::size_t i = 0; i < report.witness.size(); ++i)
      std::cout << (i ? " -> " : "") << report.witness[i];
    std::cout << "\n";
  }
  return report.verdict ? kSuccess : kInconclusive;
}

struct VerifyOptions {
  std::string equivalence = "strong";
  std::string representation;
  std::string direction = "universal";
  bool bypass_tightness = false;
  unsigned time_limit = 60;
  unsigned cores = 1;
  std::string save_problems;
  std::string format = "text";
  std::string prover = "auto";
  bool dry_run = false;
  std::vector<std::string> files;
  std::string left;
  std::string right;
  std::string user_guide;
  std::string proof_outline;
};

struct Files {
  std::vector<std::string> sides;
  std::string user_guide;
  std::string proof_outline;
};

Files classify(const VerifyOptions &options) {
  Files files;
  std::vector<std::string> programs;
  std::vector<std::string> specifications;
  for (const std::string &file : options.files) {
    std::string extension = fs::path(file).extension().string();
    if (extension == ".lp")
      programs.push_back(file);
    else if (extension == ".spec")
      specifications.push_back(file);
    else if (extension == ".ug")
      files.user_guide = file;
    else if (extension == ".po")
      files.proof_outline = file;
    else
      throw Error("cannot infer the role of `" + file + "`; use --left, --right, --user-guide or --proof-outline");
  }
  // A specification plays the left side against a program.
  files.sides = specifications;
  files.sides.insert(files.sides.end(), programs.begin(), programs.end());
  if (!options.left.empty())
    files.sides.insert(files.sides.begin(), options.left);
  if (!options.right.empty())
    files.sides.push_back(options.right);
  if (!options.user_guide.empty())
    files.user_guide = options.user_guide;
  if (!options.proof_outline.empty())
    files.proof_outline = options.proof_outline;
  if (files.sides.size() != 2)
    throw Error("expected exactly two programs or specifications, got " + std::to_string(files.sides.size()));
  return files;
}

verify::Side read_side(const std::string &path) {
  std::string text = read_input(path);
  if (fs::path(path).extension() == ".spec")
    return control::parse_specification(text);
  return asp::parse_program(text);
}

std::string status_text(const verify::ReportEntry &entry) {
  switch (entry.status) {
  case verify::ClaimStatus::Proven:
    return "Theorem";
  case verify::ClaimStatus::Trivial:
    return "Trivial";
  case verify::ClaimStatus::Timeout:
    return "Timeout";
  default:
    return entry.detail.empty() ? std::string(verify::to_string(entry.status)) : entry.detail;
  }
}

int verify_command(const VerifyOptions &options) {
  auto direction = control::parse_direction(options.direction);
  if (!direction)
    throw Error("unknown direction `" + options.direction + "`");

  verify::Task task;
  if (options.equivalence == "strong") {
    Files files = classify(options);
    if (!files.user_guide.empty() || !files.proof_outline.empty())
      throw Error("strong equivalence takes no user guide or proof outline");
    std::string representation = options.representation.empty() ? "tau-star" : options.representation;
    auto kind = translate::parse_translation_kind(representation);
    if (!kind || (*kind != translate::TranslationKind::TauStar && *kind != translate::TranslationKind::Mu))
      throw Error("formula representation must be tau-star or mu");
    verify::Side left = read_side(files.sides[0]);
    verify::Side right = read_side(files.sides[1]);
    if (!std::holds_alternative<asp::Program>(left) || !std::holds_alternative<asp::Program>(right))
      throw Error("strong equivalence compares two programs");
    task = verify::assemble_strong_equivalence(std::get<asp::Program>(left), std::get<asp::Program>(right), *kind,
                                               *direction);
  } else if (options.equivalence == "external") {
    if (!options.representation.empty() && options.representation != "tau-star")
      throw Error("external equivalence uses the tau-star representation");
    Files files = classify(options);
    control::UserGuide guide;
    if (!files.user_guide.empty())
      guide = control::parse_user_guide(read_input(files.user_guide));
    control::ProofOutline outline;
    if (!files.proof_outline.empty())
      outline = control::parse_proof_outline(read_input(files.proof_outline));
    verify::ExternalOptions external{*direction, options.bypass_tightness};
    task = verify::assemble_external_equivalence(read_side(files.sides[0]), read_side(files.sides[1]), guide,
                                                 outline, external);
  } else {
    throw Error("unknown equivalence `" + options.equivalence + "`");
  }
  for (const std::string &warning : task.warnings)
    std::cerr << "warning: " << warning << "\n";

  atp::ProverConfig config;
  config.time_limit = options.time_limit;
  config.cores = options.cores;
  if (options.prover == "vampire")
    config.kind = atp::ProverKind::Vampire;
  else if (options.prover == "z3")
    config.kind = atp::ProverKind::Z3;
  else if (options.prover != "auto")
    throw Error("unknown prover `" + options.prover + "`");

  verify::RunOptions run;
  run.save_problems = options.save_problems;
  run.dry_run = options.dry_run;
  bool text = options.format == "text";
  if (text)
    run.on_result = [](const verify::ReportEntry &entry) {
      std::cout << "> " << entry.claim << " (" << control::to_string(entry.direction) << ")  Status: "
                << status_text(entry) << "  [" << std::fixed << std::setprecision(2) << entry.seconds << " s]"
                << std::endl;
    };
  verify::VerificationReport report = verify::run_verification(task, config, run);

  if (text) {
    switch (report.verdict) {
    case verify::Verdict::Success:
      std::cout << "> Success! Anthem found a proof of the theorem.\n";
      break;
    case verify::Verdict::Inconclusive:
      std::cout << "> Inconclusive. Anthem could not prove every claim; this is not a proof of non-equivalence.\n";
      break;
    case verify::Verdict::Failure:
      std::cout << "> Failure. The prover reported an error.\n";
      break;
    }
  } else {
    nlohmann::json claims = nlohmann::json::array();
    for (const verify::ReportEntry &entry : report.entries)
      claims.push_back({{"claim", entry.claim},
                        {"direction", control::to_string(entry.direction)},
                        {"status", verify::to_string(entry.status)},
                        {"seconds", entry.seconds},
                        {"detail", entry.detail}});
    nlohmann::json out{{"task", task.name},
                       {"verdict", verify::to_string(report.verdict)},
                       {"claims", claims},
                       {"warnings", task.warnings}};
    std::cout << out.dump(2) << "\n";
  }
  switch (report.verdict) {
  case verify::Verdict::Success:
    return kSuccess;
  case verify::Verdict::Inconclusive:
    return kInconclusive;
  case verify::Verdict::Failure:
    break;
  }
  return kError;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Translate, analyze and verify mini-gringo programs"};
  app.require_subcommand(1);

  std::string translate_input = "-";
  std::string translation;
  CLI::App *translate_app = app.add_subcommand("translate", "Translate a program or theory");
  translate_app->add_option("input", translate_input, "Program or theory file, `-` for standard input");
  translate_app->add_option("--with", translation, "tau-star | natural | mu | completion | gamma")->required();

  std::string analyze_input;
  std::string property = "tightness";
  CLI::App *analyze_app = app.add_subcommand("analyze", "Check a program property");
  analyze_app->add_option("input", analyze_input, "Program file, `-` for standard input")->required();
  analyze_app->add_option("--property", property, "tightness | regularity");

  VerifyOptions options;
  CLI::App *verify_app = app.add_subcommand("verify", "Verify an equivalence claim");
  verify_app->add_option("--equivalence", options.equivalence, "strong | external");
  verify_app->add_option("--formula-representation", options.representation, "tau-star | mu");
  verify_app->add_option("--direction", options.direction, "universal | forward | backward");
  verify_app->add_flag("--bypass-tightness", options.bypass_tightness, "Skip the tightness check");
  verify_app->add_option("-t,--time-limit", options.time_limit, "Prover time limit per claim in seconds")
      ->check(CLI::PositiveNumber);
  verify_app->add_option("-m,--cores", options.cores, "Prover cores")->check(CLI::PositiveNumber);
  verify_app->add_option("--save-problems", options.save_problems, "Directory for TPTP problems");
  verify_app->add_option("--format", options.format, "text | json")->check(CLI::IsMember({"text", "json"}));
  verify_app->add_option("--prover", options.prover, "auto | vampire | z3");
  verify_app->add_flag("--dry-run", options.dry_run, "Assemble and save problems without running the prover");
  verify_app->add_option("--left", options.left, "Left program or specification");
  verify_app->add_option("--right", options.right, "Right program or specification");
  verify_app->add_option("--user-guide", options.user_guide, "User guide");
  verify_app->add_option("--proof-outline", options.proof_outline, "Proof outline");
  verify_app->add_option("files", options.files, "Programs (.lp), specifications (.spec), guide (.ug), outline (.po)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &error) {
    int code = app.exit(error);
    return code == 0 ? kSuccess : kError;
  }

  try {
    if (*translate_app)
      return translate_command(translate_input, translation);
    if (*analyze_app)
      return analyze_command(analyze_input, property);
    return verify_command(options);
  } catch (const Refusal &refusal) {
    std::cerr << "refused: " << refusal.what() << "\n";
    if (!refusal.witness().empty()) {
      std::cerr << "witness:";
      for (std::size_t i = 0; i < refusal.witness().size(); ++i)
        std::cerr << (i ? " -> " : " ") << refusal.witness()[i];
      std::cerr << "\n";
    }
    std::cerr << "use --bypass-tightness if the program is known to be locally tight\n";
    return kRefused;
  } catch (const ProverUnavailable &error) {
    std::cerr << "error: " << error.what() << "\n";
    return kError;
  } catch (const Error &error) {
    std::cerr << "error: " << error.what() << "\n";
    return kError;
  }
}
