#include <anthem/atp/atp.hpp>
#include <anthem/fol/io.hpp>
#include <anthem/fol/operations.hpp>

#include <cctype>
#include <sstream>

namespace anthem::atp {

namespace {

const std::set<std::string> kReserved = {
    "general",        "symbol",           "f__integer__",    "f__symbolic__",      "c__infimum__",
    "c__supremum__",  "p__is_integer__",  "p__is_symbolic__", "p__less_equal__",   "p__less__",
    "p__greater__",   "p__greater_equal__",
};

std::string type_name(fol::Sort sort) {
  switch (sort) {
  case fol::Sort::Integer:
    return "$int";
  case fol::Sort::Symbol:
    return "symbol";
  case fol::Sort::General:
    break;
  }
  return "general";
}

std::string declaration(const std::string &symbol, const std::string &type) {
  return "tff(type_" + symbol + ", type, " + symbol + ": " + type + ").";
}

std::string axiom(const std::string &name, const std::string &formula) {
  return "tff(standard_" + name + ", axiom, " + formula + ").";
}

// TPTP formula names must start with a lowercase letter.
std::string sanitize(const std::string &name, std::set<std::string> &used) {
  std::string result;
  for (char c : name)
    result += std::isalnum(static_cast<unsigned char>(c)) || c == '_' ? c : '_';
  if (result.empty() || !std::islower(static_cast<unsigned char>(result.front())))
    result = "f" + result;
  std::string unique = result;
  for (std::size_t i = 2; used.contains(unique); ++i)
    unique = result + "_" + std::to_string(i);
  used.insert(unique);
  return unique;
}

// Predicates sharing a name across arities or clashing with a constant get `name__arity`.
std::map<Predicate, std::string> predicate_mangling(const Signature &signature) {
  std::map<std::string, std::size_t> arities;
  for (const Predicate &predicate : signature.predicates)
    ++arities[predicate.name];
  std::map<Predicate, std::string> renaming;
  for (const Predicate &predicate : signature.predicates) {
    bool clash = arities[predicate.name] > 1 || signature.symbols.contains(predicate.name) ||
                 signature.function_constants.contains(predicate.name) || kReserved.contains(predicate.name);
    if (clash)
      renaming.emplace(predicate, predicate.name + "__" + std::to_string(predicate.arity));
  }
  return renaming;
}

void collect(const fol::Formula &formula, Signature &signature) {
  for (const Predicate &predicate : fol::predicates(formula))
    signature.predicates.insert(predicate);
  for (const std::string &symbol : fol::symbolic_constants(formula))
    signature.symbols.insert(symbol);
  for (const auto &[name, sort] : fol::function_constants(formula))
    signature.function_constants.emplace(name, sort);
}

} // namespace

Signature signature(const Problem &problem) {
  Signature result;
  for (const NamedFormula &axiom : problem.axioms)
    collect(axiom.formula, result);
  collect(problem.conjecture.formula, result);
  return result;
}

std::vector<std::string> standard_axioms(const Signature &signature) {
  std::vector<std::string> lines = {
      "tff(type_general, type, general: $tType).",
      "tff(type_symbol, type, symbol: $tType).",
      declaration("f__integer__", "($int) > general"),
      declaration("f__symbolic__", "(symbol) > general"),
      declaration("c__infimum__", "general"),
      declaration("c__supremum__", "general"),
      declaration("p__is_integer__", "(general) > $o"),
      declaration("p__is_symbolic__", "(general) > $o"),
      declaration("p__less_equal__", "(general * general) > $o"),
      declaration("p__less__", "(general * general) > $o"),
      declaration("p__greater_equal__", "(general * general) > $o"),
      declaration("p__greater__", "(general * general) > $o"),
      axiom("is_integer", "![X: general]: ( p__is_integer__(X) <=> ( ?[N: $int]: ( X = f__integer__(N) ) ) )"),
      axiom("is_symbolic", "![X: general]: ( p__is_symbolic__(X) <=> ( ?[S: symbol]: ( X = f__symbolic__(S) ) ) )"),
      axiom("universe",
            "![X: general]: ( ( X = c__infimum__ ) | p__is_integer__(X) | p__is_symbolic__(X) | ( X = c__supremum__ ) )"),
      axiom("integer_injective",
            "![N1: $int, N2: $int]: ( ( f__integer__(N1) = f__integer__(N2) ) => ( N1 = N2 ) )"),
      axiom("symbolic_injective",
            "![S1: symbol, S2: symbol]: ( ( f__symbolic__(S1) = f__symbolic__(S2) ) => ( S1 = S2 ) )"),
      axiom("integer_order",
            "![N1: $int, N2: $int]: ( p__less_equal__(f__integer__(N1), f__integer__(N2)) <=> $lesseq(N1, N2) )"),
      axiom("order_transitive", "![X: general, Y: general, Z: general]: ( ( p__less_equal__(X, Y) & "
                                "p__less_equal__(Y, Z) ) => p__less_equal__(X, Z) )"),
      axiom("order_antisymmetric",
            "![X: general, Y: general]: ( ( p__less_equal__(X, Y) & p__less_equal__(Y, X) ) => ( X = Y ) )"),
      axiom("order_total", "![X: general, Y: general]: ( p__less_equal__(X, Y) | p__less_equal__(Y, X) )"),
      axiom("less", "![X: general, Y: general]: ( p__less__(X, Y) <=> ( p__less_equal__(X, Y) & ( X != Y ) ) )"),
      axiom("greater_equal", "![X: general, Y: general]: ( p__greater_equal__(X, Y) <=> p__less_equal__(Y, X) )"),
      axiom("greater", "![X: general, Y: general]: ( p__greater__(X, Y) <=> p__less__(Y, X) )"),
      axiom("integers_below_symbols", "![N: $int, S: symbol]: p__less__(f__integer__(N), f__symbolic__(S))"),
      axiom("infimum_least", "![N: $int]: p__less__(c__infimum__, f__integer__(N))"),
      axiom("supremum_greatest", "![S: symbol]: p__less__(f__symbolic__(S), c__supremum__)"),
      axiom("infimum_below_supremum", "p__less__(c__infimum__, c__supremum__)"),
  };

  for (const std::string &symbol : signature.symbols)
    lines.push_back(declaration(symbol, "symbol"));
  const std::string *previous = nullptr;
  for (const std::string &symbol : signature.symbols) {
    if (previous)
      lines.push_back(axiom("symbol_order_" + *previous + "_" + symbol,
                            "p__less__(f__symbolic__(" + *previous + "), f__symbolic__(" + symbol + "))"));
    previous = &symbol;
  }
  return lines;
}

std::string emit_tptp(const Problem &problem) {
  Signature sig = signature(problem);
  std::map<Predicate, std::string> mangling = predicate_mangling(sig);

  std::ostringstream out;
  out << "% " << problem.name << "\n";
  for (const std::string &line : standard_axioms(sig))
    out << line << "\n";

  for (const auto &[name, sort] : sig.function_constants)
    out << declaration(name, type_name(sort)) << "\n";
  for (const Predicate &predicate : sig.predicates) {
    auto it = mangling.find(predicate);
    std::string name = it == mangling.end() ? predicate.name : it->second;
    std::string type = "$o";
    if (predicate.arity > 0) {
      type = "(general";
      for (std::size_t i = 1; i < predicate.arity; ++i)
        type += " * general";
      type += ") > $o";
    }
    out << declaration(name, type) << "\n";
  }

  std::set<std::string> used;
  for (const NamedFormula &formula : problem.axioms)
    out << "tff(" << sanitize(formula.name, used) << ", axiom, "
        << fol::format_tptp(fol::rename_predicates(formula.formula, mangling)) << ").\n";
  out << "tff(" << sanitize(problem.conjecture.name, used) << ", conjecture, "
      << fol::format_tptp(fol::rename_predicates(problem.conjecture.formula, mangling)) << ").\n";
  return out.str();
}

} // namespace anthem::atp
