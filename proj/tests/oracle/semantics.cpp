#include "oracle.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace oracle {

using anthem::fol::Formula;
using anthem::fol::FormulaKind;
using anthem::fol::Relation;
using anthem::fol::Sort;
using anthem::fol::Term;
using anthem::fol::TermKind;
using anthem::fol::Variable;

std::string to_string(const Value &value) {
  switch (value.kind) {
  case Value::Kind::Infimum:
    return "#inf";
  case Value::Kind::Integer:
    return std::to_string(value.number);
  case Value::Kind::Symbol:
    return value.symbol;
  case Value::Kind::Supremum:
    return "#sup";
  }
  return "?";
}

Universe Universe::make(std::vector<std::int64_t> integers, std::vector<std::string> symbols) {
  Universe universe;
  for (std::int64_t n : integers)
    universe.values.push_back(Value::integer(n));
  for (std::string &s : symbols)
    universe.values.push_back(Value::sym(std::move(s)));
  std::sort(universe.values.begin(), universe.values.end());
  return universe;
}

bool Universe::contains(const Value &value) const {
  return std::binary_search(values.begin(), values.end(), value);
}

std::vector<Value> Universe::of_sort(Sort sort) const {
  std::vector<Value> result;
  for (const Value &value : values)
    if (sort == Sort::General || (sort == Sort::Integer && value.kind == Value::Kind::Integer) ||
        (sort == Sort::Symbol && value.kind == Value::Kind::Symbol))
      result.push_back(value);
  return result;
}

namespace {

using Environment = std::map<Variable, Value>;

struct Context {
  const Universe &universe;
  const Constants &constants;
  OutsideAtoms outside;
};

Value evaluate(const Term &term, const Environment &env, const Context &context) {
  auto integer = [&](const Term &t) {
    Value v = evaluate(t, env, context);
    if (!v.is_integer())
      throw std::logic_error("arithmetic on a non-integer value");
    return v.number;
  };
  switch (term.kind()) {
  case TermKind::Numeral:
    return Value::integer(term.value());
  case TermKind::SymbolicConstant:
    return Value::sym(term.name());
  case TermKind::Infimum:
    return {Value::Kind::Infimum, 0, ""};
  case TermKind::Supremum:
    return {Value::Kind::Supremum, 0, ""};
  case TermKind::Variable: {
    auto it = env.find(term.as_variable());
    if (it == env.end())
      throw std::logic_error("unbound variable " + term.name());
    return it->second;
  }
  case TermKind::FunctionConstant: {
    auto it = context.constants.find(term.name());
    if (it == context.constants.end())
      throw std::logic_error("no value for constant " + term.name());
    return it->second;
  }
  case TermKind::Negative:
    return Value::integer(-integer(term.args()[0]));
  case TermKind::Add:
    return Value::integer(integer(term.args()[0]) + integer(term.args()[1]));
  case TermKind::Subtract:
    return Value::integer(integer(term.args()[0]) - integer(term.args()[1]));
  case TermKind::Multiply:
    return Value::integer(integer(term.args()[0]) * integer(term.args()[1]));
  }
  throw std::logic_error("unknown term");
}

bool compare(const Value &lhs, Relation relation, const Value &rhs) {
  switch (relation) {
  case Relation::Equal:
    return lhs == rhs;
  case Relation::NotEqual:
    return lhs != rhs;
  case Relation::Less:
    return lhs < rhs;
  case Relation::LessEqual:
    return lhs <= rhs;
  case Relation::Greater:
    return lhs > rhs;
  case Relation::GreaterEqual:
    return lhs >= rhs;
  }
  return false;
}

bool comparison(const Formula &formula, const Environment &env, const Context &context) {
  Value previous = evaluate(formula.terms()[0], env, context);
  for (const auto &guard : formula.guards()) {
    Value next = evaluate(guard.term, env, context);
    if (!compare(previous, guard.relation, next))
      return false;
    previous = next;
  }
  return true;
}

// nullopt when an argument lies outside the universe
std::optional<GroundAtom> ground_atom(const Formula &formula, const Environment &env, const Context &context) {
  GroundAtom atom{formula.predicate_name(), {}};
  for (const Term &term : formula.terms()) {
    Value value = evaluate(term, env, context);
    if (!context.universe.contains(value))
      return std::nullopt;
    atom.second.push_back(std::move(value));
  }
  return atom;
}

template <typename Body>
bool quantify(const Formula &formula, std::size_t index, Environment &env, const Context &context, Body &&body) {
  if (index == formula.variables().size())
    return body(env);
  const Variable &variable = formula.variables()[index];
  bool universal = formula.kind() == FormulaKind::Forall;
  auto saved = env.find(variable) == env.end() ? std::nullopt : std::optional<Value>(env[variable]);
  bool result = universal;
  for (const Value &value : context.universe.of_sort(variable.sort)) {
    env[variable] = value;
    bool inner = quantify(formula, index + 1, env, context, body);
    if (inner != universal) {
      result = inner;
      break;
    }
  }
  if (saved)
    env[variable] = *saved;
  else
    env.erase(variable);
  return result;
}

bool outside_value(const Context &context, bool positive) {
  return positive && context.outside == OutsideAtoms::ByPolarity;
}

// every subterm evaluates to an element of the universe
bool within_universe(const Term &term, const Environment &env, const Context &context) {
  for (const Term &argument : term.args())
    if (!within_universe(argument, env, context))
      return false;
  return context.universe.contains(evaluate(term, env, context));
}

bool intermediate_outside(const Formula &formula, const Environment &env, const Context &context) {
  if (context.outside != OutsideAtoms::ByPolarity)
    return false;
  for (const Term &term : formula.terms())
    if (!within_universe(term, env, context))
      return true;
  if (formula.kind() == FormulaKind::Comparison)
    for (const anthem::fol::Guard &guard : formula.guards())
      if (!within_universe(guard.term, env, context))
        return true;
  return false;
}

bool classical_eval(const Formula &formula, const Interpretation &model, Environment &env, const Context &context,
                    bool positive) {
  switch (formula.kind()) {
  case FormulaKind::Truth:
    return true;
  case FormulaKind::Falsity:
    return false;
  case FormulaKind::Atom: {
    auto atom = ground_atom(formula, env, context);
    if (!atom || intermediate_outside(formula, env, context))
      return outside_value(context, positive);
    return model.contains(*atom);
  }
  case FormulaKind::Comparison:
    if (intermediate_outside(formula, env, context))
      return outside_value(context, positive);
    return comparison(formula, env, context);
  case FormulaKind::Not:
    return !classical_eval(formula.child(), model, env, context, !positive);
  case FormulaKind::And:
    return std::all_of(formula.children().begin(), formula.children().end(),
                       [&](const Formula &child) { return classical_eval(child, model, env, context, positive); });
  case FormulaKind::Or:
    return std::any_of(formula.children().begin(), formula.children().end(),
                       [&](const Formula &child) { return classical_eval(child, model, env, context, positive); });
  case FormulaKind::Implies:
    return !classical_eval(formula.lhs(), model, env, context, !positive) ||
           classical_eval(formula.rhs(), model, env, context, positive);
  case FormulaKind::Iff:
    return classical_eval(Formula::implication(formula.lhs(), formula.rhs()), model, env, context, positive) &&
           classical_eval(Formula::implication(formula.rhs(), formula.lhs()), model, env, context, positive);
  case FormulaKind::Forall:
  case FormulaKind::Exists:
    return quantify(formula, 0, env, context, [&](Environment &inner) {
      return classical_eval(formula.child(), model, inner, context, positive);
    });
  }
  return false;
}

struct Worlds {
  const Interpretation &here;
  const Interpretation &there;
};

bool here_eval(const Formula &formula, const Worlds &worlds, Environment &env, const Context &context,
               bool positive) {
  switch (formula.kind()) {
  case FormulaKind::Atom: {
    auto atom = ground_atom(formula, env, context);
    if (!atom || intermediate_outside(formula, env, context))
      return outside_value(context, positive);
    return worlds.here.contains(*atom);
  }
  case FormulaKind::Truth:
  case FormulaKind::Falsity:
  case FormulaKind::Comparison:
    return classical_eval(formula, worlds.there, env, context, positive);
  case FormulaKind::Not:
    return !classical_eval(formula.child(), worlds.there, env, context, !positive);
  case FormulaKind::And:
    return std::all_of(formula.children().begin(), formula.children().end(), [&](const Formula &child) {
      return here_eval(child, worlds, env, context, positive);
    });
  case FormulaKind::Or:
    return std::any_of(formula.children().begin(), formula.children().end(), [&](const Formula &child) {
      return here_eval(child, worlds, env, context, positive);
    });
  case FormulaKind::Implies: {
    bool at_here = !here_eval(formula.lhs(), worlds, env, context, !positive) ||
                   here_eval(formula.rhs(), worlds, env, context, positive);
    if (!at_here)
      return false;
    return !classical_eval(formula.lhs(), worlds.there, env, context, !positive) ||
           classical_eval(formula.rhs(), worlds.there, env, context, positive);
  }
  case FormulaKind::Iff: {
    Formula forward = Formula::implication(formula.lhs(), formula.rhs());
    Formula backward = Formula::implication(formula.rhs(), formula.lhs());
    return here_eval(forward, worlds, env, context, positive) && here_eval(backward, worlds, env, context, positive);
  }
  case FormulaKind::Forall:
  case FormulaKind::Exists:
    return quantify(formula, 0, env, context, [&](Environment &inner) {
      return here_eval(formula.child(), worlds, inner, context, positive);
    });
  }
  return false;
}

} // namespace

bool holds(const Formula &formula, const Interpretation &interpretation, const Universe &universe,
           const Constants &constants) {
  Environment env;
  Context context{universe, constants, OutsideAtoms::False};
  return classical_eval(formula, interpretation, env, context, true);
}

bool ht_holds(const Formula &formula, const Interpretation &here, const Interpretation &there,
              const Universe &universe, const Constants &constants, OutsideAtoms outside) {
  Environment env;
  Context context{universe, constants, outside};
  return here_eval(formula, {here, there}, env, context, true);
}

bool classical(const Prop &formula, Mask model) {
  switch (formula.kind) {
  case Prop::Kind::True:
    return true;
  case Prop::Kind::False:
    return false;
  case Prop::Kind::Atom:
    return (model >> formula.atom) & 1u;
  case Prop::Kind::Not:
    return !classical(formula.children[0], model);
  case Prop::Kind::And:
    for (const Prop &child : formula.children)
      if (!classical(child, model))
        return false;
    return true;
  case Prop::Kind::Or:
    for (const Prop &child : formula.children)
      if (classical(child, model))
        return true;
    return false;
  case Prop::Kind::Implies:
    return !classical(formula.children[0], model) || classical(formula.children[1], model);
  }
  return false;
}

bool ht(const Prop &formula, Mask here, Mask there) {
  switch (formula.kind) {
  case Prop::Kind::True:
    return true;
  case Prop::Kind::False:
    return false;
  case Prop::Kind::Atom:
    return (here >> formula.atom) & 1u;
  case Prop::Kind::Not:
    return !classical(formula.children[0], there);
  case Prop::Kind::And:
    for (const Prop &child : formula.children)
      if (!ht(child, here, there))
        return false;
    return true;
  case Prop::Kind::Or:
    for (const Prop &child : formula.children)
      if (ht(child, here, there))
        return true;
    return false;
  case Prop::Kind::Implies:
    return (!ht(formula.children[0], here, there) || ht(formula.children[1], here, there)) &&
           classical(formula, there);
  }
  return false;
}

std::vector<std::pair<Mask, Mask>> ht_models(const std::vector<Prop> &theory, Mask candidates) {
  std::vector<std::pair<Mask, Mask>> result;
  auto satisfies = [&](Mask here, Mask there) {
    return std::all_of(theory.begin(), theory.end(), [&](const Prop &p) { return ht(p, here, there); });
  };
  for (Mask there = candidates;; there = (there - 1) & candidates) {
    for (Mask here = there;; here = (here - 1) & there) {
      if (satisfies(here, there))
        result.emplace_back(here, there);
      if (here == 0)
        break;
    }
    if (there == 0)
      break;
  }
  return result;
}

std::vector<Mask> stable_models(const GroundProgram &program, Mask candidates) {
  std::vector<Mask> result;
  auto satisfies = [&](Mask here, Mask there) {
    return std::all_of(program.rules.begin(), program.rules.end(),
                       [&](const Prop &p) { return ht(p, here, there); });
  };
  for (Mask there = candidates;; there = (there - 1) & candidates) {
    if (satisfies(there, there)) {
      bool minimal = true;
      for (Mask here = (there - 1) & there; there != 0; here = (here - 1) & there) {
        if (satisfies(here, there)) {
          minimal = false;
          break;
        }
        if (here == 0)
          break;
      }
      if (minimal)
        result.push_back(there);
    }
    if (there == 0)
      break;
  }
  std::sort(result.begin(), result.end());
  return result;
}

} // namespace oracle
