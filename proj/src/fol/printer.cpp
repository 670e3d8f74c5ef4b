#include <anthem/error.hpp>
#include <anthem/fol/io.hpp>
#include <anthem/fol/operations.hpp>

#include <map>
#include <sstream>

namespace anthem::fol {

namespace {

std::string_view suffix(Sort sort) {
  switch (sort) {
  case Sort::General:
    return "";
  case Sort::Integer:
    return "$i";
  case Sort::Symbol:
    return "$s";
  }
  return "";
}

// ---------------------------------------------------------------- custom syntax

int term_precedence(const Term &term) {
  switch (term.kind()) {
  case TermKind::Add:
  case TermKind::Subtract:
    return 1;
  case TermKind::Multiply:
    return 2;
  case TermKind::Negative:
    return 3;
  case TermKind::Numeral:
    return term.value() < 0 ? 3 : 4;
  default:
    return 4;
  }
}

void print_term(std::ostream &out, const Term &term);

void print_term_operand(std::ostream &out, const Term &term, int minimum) {
  if (term_precedence(term) < minimum) {
    out << '(';
    print_term(out, term);
    out << ')';
  } else {
    print_term(out, term);
  }
}

void print_term(std::ostream &out, const Term &term) {
  switch (term.kind()) {
  case TermKind::Numeral:
    out << term.value();
    return;
  case TermKind::SymbolicConstant:
    out << term.name();
    return;
  case TermKind::Infimum:
    out << "#inf";
    return;
  case TermKind::Supremum:
    out << "#sup";
    return;
  case TermKind::Variable:
    out << term.name() << suffix(term.sort());
    return;
  case TermKind::FunctionConstant:
    out << term.name() << (term.sort() == Sort::General ? "$g" : suffix(term.sort()));
    return;
  case TermKind::Negative: {
    out << '-';
    const Term &arg = term.args()[0];
    // `-3` reads back as a numeral, so a negated numeral keeps its parentheses.
    if (arg.kind() == TermKind::Numeral) {
      out << '(' << arg.value() << ')';
    } else {
      print_term_operand(out, arg, 4);
    }
    return;
  }
  case TermKind::Add:
  case TermKind::Subtract:
  case TermKind::Multiply: {
    int own = term_precedence(term);
    print_term_operand(out, term.args()[0], own);
    out << (term.kind() == TermKind::Add ? " + " : term.kind() == TermKind::Subtract ? " - " : " * ");
    print_term_operand(out, term.args()[1], own + 1);
    return;
  }
  }
}

int formula_level(const Formula &formula) {
  switch (formula.kind()) {
  case FormulaKind::Iff:
    return 1;
  case FormulaKind::Implies:
    return 2;
  case FormulaKind::Or:
    return 3;
  case FormulaKind::And:
    return 4;
  case FormulaKind::Not:
  case FormulaKind::Forall:
  case FormulaKind::Exists:
    return 5;
  default:
    return 6;
  }
}

void print_formula(std::ostream &out, const Formula &formula);

void print_at(std::ostream &out, const Formula &formula, int minimum) {
  if (formula_level(formula) < minimum) {
    out << '(';
    print_formula(out, formula);
    out << ')';
  } else {
    print_formula(out, formula);
  }
}

void print_formula(std::ostream &out, const Formula &formula) {
  switch (formula.kind()) {
  case FormulaKind::Truth:
    out << "#true";
    return;
  case FormulaKind::Falsity:
    out << "#false";
    return;
  case FormulaKind::Atom:
    out << formula.predicate_name();
    if (!formula.terms().empty()) {
      out << '(';
      for (std::size_t i = 0; i < formula.terms().size(); ++i) {
        if (i > 0)
          out << ", ";
        print_term(out, formula.terms()[i]);
      }
      out << ')';
    }
    return;
  case FormulaKind::Comparison:
    print_term(out, formula.terms()[0]);
    for (const Guard &guard : formula.guards()) {
      out << ' ' << to_string(guard.relation) << ' ';
      print_term(out, guard.term);
    }
    return;
  case FormulaKind::Not:
    out << "not ";
    print_at(out, formula.child(), 5);
    return;
  case FormulaKind::And:
  case FormulaKind::Or: {
    const char *separator = formula.kind() == FormulaKind::And ? " and " : " or ";
    int child_level = formula_level(formula) + 1;
    for (std::size_t i = 0; i < formula.children().size(); ++i) {
      if (i > 0)
        out << separator;
      print_at(out, formula.children()[i], child_level);
    }
    return;
  }
  case FormulaKind::Implies:
    print_at(out, formula.lhs(), 3);
    out << " -> ";
    print_at(out, formula.rhs(), 2);
    return;
  case FormulaKind::Iff:
    print_at(out, formula.lhs(), 2);
    out << " <-> ";
    print_at(out, formula.rhs(), 2);
    return;
  case FormulaKind::Forall:
  case FormulaKind::Exists: {
    out << (formula.kind() == FormulaKind::Forall ? "forall" : "exists");
    for (const Variable &variable : formula.variables())
      out << ' ' << format_variable(variable);
    const Formula &body = formula.child();
    if (body.is_atomic() && body.kind() != FormulaKind::Comparison) {
      out << ' ';
      print_formula(out, body);
    } else {
      out << " (";
      print_formula(out, body);
      out << ')';
    }
    return;
  }
  }
}

// ------------------------------------------------------------------------ TPTP

class TptpPrinter {
public:
  explicit TptpPrinter(const Formula &formula) {
    std::map<std::string, std::set<Sort>> sorts;
    collect(formula, sorts);
    for (const auto &[name, used] : sorts) {
      for (Sort sort : used) {
        std::string rendered = name;
        if (used.size() > 1 && sort != Sort::General)
          rendered += sort == Sort::Integer ? "__int" : "__sym";
        names_[Variable{name, sort}] = rendered;
      }
    }
  }

  void formula(std::ostream &out, const Formula &formula) {
    switch (formula.kind()) {
    case FormulaKind::Truth:
      out << "$true";
      return;
    case FormulaKind::Falsity:
      out << "$false";
      return;
    case FormulaKind::Atom:
      out << formula.predicate_name();
      if (!formula.terms().empty()) {
        out << '(';
        for (std::size_t i = 0; i < formula.terms().size(); ++i) {
          if (i > 0)
            out << ", ";
          general(out, formula.terms()[i]);
        }
        out << ')';
      }
      return;
    case FormulaKind::Comparison: {
      const auto &guards = formula.guards();
      if (guards.size() > 1)
        out << "( ";
      const Term *lhs = &formula.terms()[0];
      for (std::size_t i = 0; i < guards.size(); ++i) {
        if (i > 0)
          out << " & ";
        comparison(out, *lhs, guards[i].relation, guards[i].term);
        lhs = &guards[i].term;
      }
      if (guards.size() > 1)
        out << " )";
      return;
    }
    case FormulaKind::Not:
      out << "~ ";
      formula_unit(out, formula.child());
      return;
    case FormulaKind::And:
    case FormulaKind::Or: {
      const char *separator = formula.kind() == FormulaKind::And ? " & " : " | ";
      out << "( ";
      for (std::size_t i = 0; i < formula.children().size(); ++i) {
        if (i > 0)
          out << separator;
        formula_unit(out, formula.children()[i]);
      }
      out << " )";
      return;
    }
    case FormulaKind::Implies:
    case FormulaKind::Iff:
      out << "( ";
      formula_unit(out, formula.lhs());
      out << (formula.kind() == FormulaKind::Implies ? " => " : " <=> ");
      formula_unit(out, formula.rhs());
      out << " )";
      return;
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      out << (formula.kind() == FormulaKind::Forall ? "![" : "?[");
      for (std::size_t i = 0; i < formula.variables().size(); ++i) {
        const Variable &variable = formula.variables()[i];
        if (i > 0)
          out << ", ";
        out << names_.at(variable) << ": " << tptp_type(variable.sort);
      }
      out << "]: ";
      formula_unit(out, formula.child());
      return;
    }
    }
  }

private:
  static std::string_view tptp_type(Sort sort) {
    switch (sort) {
    case Sort::General:
      return "general";
    case Sort::Integer:
      return "$int";
    case Sort::Symbol:
      return "symbol";
    }
    return "general";
  }

  // Binary connectives are always bracketed, so every rendered formula is a unit.
  void formula_unit(std::ostream &out, const Formula &f) { formula(out, f); }

  void comparison(std::ostream &out, const Term &lhs, Relation relation, const Term &rhs) {
    bool integers = lhs.sort() == Sort::Integer && rhs.sort() == Sort::Integer;
    bool symbols = lhs.sort() == Sort::Symbol && rhs.sort() == Sort::Symbol;
    auto side = [&](const Term &term) {
      if (integers)
        integer(out, term);
      else if (symbols)
        symbol(out, term);
      else
        general(out, term);
    };

    if (relation == Relation::Equal || relation == Relation::NotEqual) {
      out << "( ";
      side(lhs);
      out << (relation == Relation::Equal ? " = " : " != ");
      side(rhs);
      out << " )";
      return;
    }
    if (integers) {
      switch (relation) {
      case Relation::Less:
        out << "$less(";
        break;
      case Relation::LessEqual:
        out << "$lesseq(";
        break;
      case Relation::Greater:
        out << "$greater(";
        break;
      default:
        out << "$greatereq(";
        break;
      }
    } else {
      switch (relation) {
      case Relation::Less:
        out << "p__less__(";
        break;
      case Relation::LessEqual:
        out << "p__less_equal__(";
        break;
      case Relation::Greater:
        out << "p__greater__(";
        break;
      default:
        out << "p__greater_equal__(";
        break;
      }
    }
    if (integers) {
      integer(out, lhs);
      out << ", ";
      integer(out, rhs);
    } else {
      general(out, lhs);
      out << ", ";
      general(out, rhs);
    }
    out << ')';
  }

  void general(std::ostream &out, const Term &term) {
    switch (term.sort()) {
    case Sort::Integer:
      out << "f__integer__(";
      integer(out, term);
      out << ')';
      return;
    case Sort::Symbol:
      out << "f__symbolic__(";
      symbol(out, term);
      out << ')';
      return;
    case Sort::General:
      break;
    }
    switch (term.kind()) {
    case TermKind::Infimum:
      out << "c__infimum__";
      return;
    case TermKind::Supremum:
      out << "c__supremum__";
      return;
    case TermKind::Variable:
      out << names_.at(term.as_variable());
      return;
    case TermKind::FunctionConstant:
      out << term.name();
      return;
    default:
      return;
    }
  }

  void integer(std::ostream &out, const Term &term) {
    switch (term.kind()) {
    case TermKind::Numeral:
      out << term.value();
      return;
    case TermKind::Variable:
      out << names_.at(term.as_variable());
      return;
    case TermKind::FunctionConstant:
      out << term.name();
      return;
    case TermKind::Negative:
      out << "$uminus(";
      integer(out, term.args()[0]);
      out << ')';
      return;
    case TermKind::Add:
    case TermKind::Subtract:
    case TermKind::Multiply:
      out << (term.kind() == TermKind::Add        ? "$sum("
              : term.kind() == TermKind::Subtract ? "$difference("
                                                  : "$product(");
      integer(out, term.args()[0]);
      out << ", ";
      integer(out, term.args()[1]);
      out << ')';
      return;
    default:
      return;
    }
  }

  void symbol(std::ostream &out, const Term &term) {
    if (term.kind() == TermKind::Variable)
      out << names_.at(term.as_variable());
    else
      out << term.name();
  }

  static void collect(const Term &term, std::map<std::string, std::set<Sort>> &sorts) {
    if (term.kind() == TermKind::Variable)
      sorts[term.name()].insert(term.sort());
    for (const Term &arg : term.args())
      collect(arg, sorts);
  }

  static void collect(const Formula &formula, std::map<std::string, std::set<Sort>> &sorts) {
    for (const Term &term : formula.terms())
      collect(term, sorts);
    for (const Guard &guard : formula.guards())
      collect(guard.term, sorts);
    for (const Variable &variable : formula.variables())
      sorts[variable.name].insert(variable.sort);
    for (const Formula &child : formula.children())
      collect(child, sorts);
  }

  std::map<Variable, std::string> names_;
};

} // namespace

std::string format_variable(const Variable &variable) {
  return variable.name + std::string(suffix(variable.sort));
}

std::string format_term(const Term &term) {
  std::ostringstream out;
  print_term(out, term);
  return out.str();
}

std::string format_default(const Formula &formula) {
  std::ostringstream out;
  print_formula(out, formula);
  return out.str();
}

std::string format_default(const Theory &theory) {
  std::string out;
  for (const Formula &formula : theory.formulas) {
    out += format_default(formula);
    out += ".\n";
  }
  return out;
}

std::string format_tptp(const Formula &formula) {
  VariableSet free = free_variables(formula);
  if (!free.empty()) {
    std::string names;
    for (const Variable &variable : free)
      names += (names.empty() ? "" : ", ") + format_variable(variable);
    throw ClosureError("formula has free variables: " + names);
  }
  std::ostringstream out;
  TptpPrinter(formula).formula(out, formula);
  return out.str();
}

} // namespace anthem::fol
