#include <anthem/asp/syntax.hpp>

#include <sstream>

namespace anthem::asp {

std::string_view to_string(BinaryOperator op) {
  switch (op) {
  case BinaryOperator::Add:
    return "+";
  case BinaryOperator::Subtract:
    return "-";
  case BinaryOperator::Multiply:
    return "*";
  case BinaryOperator::Divide:
    return "/";
  case BinaryOperator::Modulo:
    return "\\";
  case BinaryOperator::Interval:
    return "..";
  }
  return "?";
}

std::string_view to_string(Relation relation) {
  switch (relation) {
  case Relation::Equal:
    return "=";
  case Relation::NotEqual:
    return "!=";
  case Relation::Less:
    return "<";
  case Relation::LessEqual:
    return "<=";
  case Relation::Greater:
    return ">";
  case Relation::GreaterEqual:
    return ">=";
  }
  return "?";
}

Term Term::numeral(std::int64_t value) {
  Term term;
  term.kind = Kind::Numeral;
  term.value = value;
  return term;
}

Term Term::constant(std::string name) {
  Term term;
  term.kind = Kind::SymbolicConstant;
  term.name = std::move(name);
  return term;
}

Term Term::variable(std::string name) {
  Term term;
  term.kind = Kind::Variable;
  term.name = std::move(name);
  return term;
}

Term Term::infimum() {
  Term term;
  term.kind = Kind::Infimum;
  return term;
}

Term Term::supremum() {
  Term term;
  term.kind = Kind::Supremum;
  return term;
}

Term Term::unary(UnaryOperator op, Term arg) {
  Term term;
  term.kind = Kind::Unary;
  term.unary_op = op;
  term.args.push_back(std::move(arg));
  return term;
}

Term Term::binary(BinaryOperator op, Term lhs, Term rhs) {
  Term term;
  term.kind = Kind::Binary;
  term.binary_op = op;
  term.args.push_back(std::move(lhs));
  term.args.push_back(std::move(rhs));
  return term;
}

namespace {

// Binding strength: interval < additive < multiplicative < unary < primary.
int precedence(const Term &term) {
  switch (term.kind) {
  case Term::Kind::Binary:
    switch (term.binary_op) {
    case BinaryOperator::Interval:
      return 1;
    case BinaryOperator::Add:
    case BinaryOperator::Subtract:
      return 2;
    default:
      return 3;
    }
  case Term::Kind::Unary:
    return term.unary_op == UnaryOperator::Negative ? 4 : 5;
  case Term::Kind::Numeral:
    return term.value < 0 ? 4 : 5;
  default:
    return 5;
  }
}

void print(std::ostream &out, const Term &term);

void print_operand(std::ostream &out, const Term &term, int minimum) {
  if (precedence(term) < minimum) {
    out << '(';
    print(out, term);
    out << ')';
  } else {
    print(out, term);
  }
}

void print(std::ostream &out, const Term &term) {
  switch (term.kind) {
  case Term::Kind::Numeral:
    out << term.value;
    break;
  case Term::Kind::SymbolicConstant:
  case Term::Kind::Variable:
    out << term.name;
    break;
  case Term::Kind::Infimum:
    out << "#inf";
    break;
  case Term::Kind::Supremum:
    out << "#sup";
    break;
  case Term::Kind::Unary:
    if (term.unary_op == UnaryOperator::Negative) {
      out << '-';
      print_operand(out, term.args[0], 4);
    } else {
      out << '|';
      print(out, term.args[0]);
      out << '|';
    }
    break;
  case Term::Kind::Binary: {
    int own = precedence(term);
    // Left-associative: the right operand needs parentheses at equal strength.
    print_operand(out, term.lhs(), own == 1 ? 2 : own);
    out << to_string(term.binary_op);
    const Term &rhs = term.rhs();
    bool negative_rhs = (rhs.kind == Term::Kind::Numeral && rhs.value < 0) ||
                        (rhs.kind == Term::Kind::Unary && rhs.unary_op == UnaryOperator::Negative);
    if (negative_rhs && own >= 2)
      out << ' ';
    print_operand(out, rhs, own + 1);
    break;
  }
  }
}

void print(std::ostream &out, const Atom &atom) {
  out << atom.predicate_name;
  if (atom.terms.empty())
    return;
  out << '(';
  for (std::size_t i = 0; i < atom.terms.size(); ++i) {
    if (i > 0)
      out << ',';
    print(out, atom.terms[i]);
  }
  out << ')';
}

void print(std::ostream &out, const BodyLiteral &literal) {
  if (const auto *lit = std::get_if<Literal>(&literal)) {
    for (int i = 0; i < lit->negations; ++i)
      out << "not ";
    print(out, lit->atom);
  } else {
    const auto &comparison = std::get<Comparison>(literal);
    print(out, comparison.lhs);
    out << ' ' << to_string(comparison.relation) << ' ';
    print(out, comparison.rhs);
  }
}

void collect_variables(const Term &term, std::set<std::string> &out) {
  if (term.kind == Term::Kind::Variable)
    out.insert(term.name);
  for (const Term &arg : term.args)
    collect_variables(arg, out);
}

void collect_constants(const Term &term, std::set<std::string> &out) {
  if (term.kind == Term::Kind::SymbolicConstant)
    out.insert(term.name);
  for (const Term &arg : term.args)
    collect_constants(arg, out);
}

} // namespace

std::string format_term(const Term &term) {
  std::ostringstream out;
  print(out, term);
  return out.str();
}

std::string format_rule(const Rule &rule) {
  std::ostringstream out;
  switch (rule.head_kind) {
  case HeadKind::Basic:
    print(out, *rule.head);
    break;
  case HeadKind::Choice:
    out << '{';
    print(out, *rule.head);
    out << '}';
    break;
  case HeadKind::Constraint:
    break;
  }
  if (!rule.body.empty() || rule.head_kind == HeadKind::Constraint) {
    out << (rule.head_kind == HeadKind::Constraint ? ":- " : " :- ");
    for (std::size_t i = 0; i < rule.body.size(); ++i) {
      if (i > 0)
        out << ", ";
      print(out, rule.body[i]);
    }
  }
  out << '.';
  return out.str();
}

std::string format_program(const Program &program) {
  std::string out;
  for (const Rule &rule : program.rules) {
    out += format_rule(rule);
    out += '\n';
  }
  return out;
}

PredicateSet predicates(const Program &program) {
  PredicateSet result;
  for (const Rule &rule : program.rules) {
    if (rule.head)
      result.insert(rule.head->predicate());
    for (const BodyLiteral &literal : rule.body)
      if (const auto *lit = std::get_if<Literal>(&literal))
        result.insert(lit->atom.predicate());
  }
  return result;
}

PredicateSet head_predicates(const Program &program) {
  PredicateSet result;
  for (const Rule &rule : program.rules)
    if (rule.head)
      result.insert(rule.head->predicate());
  return result;
}

std::set<std::string> variables(const Term &term) {
  std::set<std::string> result;
  collect_variables(term, result);
  return result;
}

std::set<std::string> variables(const Rule &rule) {
  std::set<std::string> result;
  if (rule.head)
    for (const Term &term : rule.head->terms)
      collect_variables(term, result);
  for (const BodyLiteral &literal : rule.body) {
    if (const auto *lit = std::get_if<Literal>(&literal)) {
      for (const Term &term : lit->atom.terms)
        collect_variables(term, result);
    } else {
      const auto &comparison = std::get<Comparison>(literal);
      collect_variables(comparison.lhs, result);
      collect_variables(comparison.rhs, result);
    }
  }
  return result;
}

std::set<std::string> symbolic_constants(const Program &program) {
  std::set<std::string> result;
  for (const Rule &rule : program.rules) {
    if (rule.head)
      for (const Term &term : rule.head->terms)
        collect_constants(term, result);
    for (const BodyLiteral &literal : rule.body) {
      if (const auto *lit = std::get_if<Literal>(&literal)) {
        for (const Term &term : lit->atom.terms)
          collect_constants(term, result);
      } else {
        const auto &comparison = std::get<Comparison>(literal);
        collect_constants(comparison.lhs, result);
        collect_constants(comparison.rhs, result);
      }
    }
  }
  return result;
}

} // namespace anthem::asp
