#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "zkfabric/errors.hpp"
#include "zkfabric/hash.hpp"
#include "zkfabric/syntax.hpp"

namespace zkfabric::syntax {

std::string_view to_string(OperatorKind kind) noexcept {
  switch (kind) {
    case OperatorKind::If: return "IF";
    case OperatorKind::And: return "AND";
    case OperatorKind::Or: return "OR";
    case OperatorKind::Xor: return "XOR";
    case OperatorKind::Not: return "NOT";
  }
  return "?";
}

namespace {

std::string_view trim(std::string_view s) {
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

struct Marker {
  std::size_t begin;
  std::size_t end;  // one past ']'
  std::string word;
};

// Bracketed runs of ASCII letters; any other bracket use is clause text.
std::vector<Marker> find_markers(std::string_view text) {
  std::vector<Marker> out;
  std::size_t pos = 0;
  while ((pos = text.find('[', pos)) != std::string_view::npos) {
    std::size_t j = pos + 1;
    while (j < text.size() && std::isalpha(static_cast<unsigned char>(text[j]))) ++j;
    if (j > pos + 1 && j < text.size() && text[j] == ']') {
      out.push_back({pos, j + 1, std::string(text.substr(pos + 1, j - pos - 1))});
      pos = j + 1;
    } else {
      ++pos;
    }
  }
  return out;
}

OperatorKind parse_kind(const std::string& word) {
  std::string lower(word);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "if") return OperatorKind::If;
  if (lower == "and") return OperatorKind::And;
  if (lower == "or") return OperatorKind::Or;
  if (lower == "xor") return OperatorKind::Xor;
  if (lower == "not") return OperatorKind::Not;
  throw Error(ErrorCode::UnknownOperator, word);
}

}  // namespace

std::size_t Statement::binary_operator_count() const {
  return static_cast<std::size_t>(std::count_if(operators.begin(), operators.end(),
                                                [](const auto& op) { return op.kind != OperatorKind::Not; }));
}

std::string Statement::rejoin() const {
  std::string out;
  std::size_t next_clause = 0;
  auto emit = [&out](std::string_view piece) {
    if (!out.empty()) out.push_back(' ');
    out.append(piece);
  };
  // Operators and clauses interleave as NOT* clause (BIN NOT* clause)*.
  std::size_t op = 0;
  while (next_clause < clauses.size()) {
    while (op < operators.size() && operators[op].kind == OperatorKind::Not) emit(operators[op++].marker);
    emit(clauses[next_clause++].text);
    if (op < operators.size()) emit(operators[op++].marker);
  }
  return out;
}

Statement extract(std::string_view raw_text) {
  Statement stmt;
  stmt.raw_text = std::string(raw_text);
  auto markers = find_markers(raw_text);

  std::size_t cursor = 0;
  auto take_run = [&](std::size_t until) { return trim(raw_text.substr(cursor, until - cursor)); };

  for (const auto& m : markers) {
    auto kind = parse_kind(m.word);
    auto run = take_run(m.begin);
    if (kind == OperatorKind::Not) {
      if (!run.empty()) throw Error(ErrorCode::EmptyClause, "[not] must directly precede a clause");
    } else {
      if (run.empty()) throw Error(ErrorCode::EmptyClause, "missing clause before " + std::string(raw_text.substr(m.begin, m.end - m.begin)));
      stmt.clauses.push_back({std::string(run), {}, stmt.clauses.size()});
    }
    stmt.operators.push_back({kind, std::string(raw_text.substr(m.begin, m.end - m.begin))});
    cursor = m.end;
  }
  auto tail = take_run(raw_text.size());
  if (tail.empty()) throw Error(ErrorCode::EmptyClause, "missing final clause");
  stmt.clauses.push_back({std::string(tail), {}, stmt.clauses.size()});

  if (stmt.clauses.size() > kMaxVariables) {
    throw Error(ErrorCode::TooManyVariables, std::to_string(stmt.clauses.size()) + " clauses (limit 6)");
  }
  return stmt;
}

Bytes hash_substatement(std::string_view text, std::size_t digest_bits) {
  if (digest_bits != 128 && digest_bits != 256) {
    throw std::invalid_argument("digest_bits must be 128 or 256");
  }
  auto d = sha256(text);
  return Bytes(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(digest_bits / 8));
}

// --- Expr ------------------------------------------------------------------

struct Expr::Node {
  Kind kind;
  std::size_t index = 0;
  bool value = false;
  Expr a;
  Expr b;
};

Expr::Expr() : Expr(constant(false)) {}

Expr::Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Expr Expr::var(std::size_t index) {
  return Expr(std::shared_ptr<Node>(new Node{Kind::Var, index, false, Expr(nullptr), Expr(nullptr)}));
}

Expr Expr::constant(bool value) {
  // Child slots hold null handles; the default constructor delegates here.
  return Expr(std::shared_ptr<Node>(new Node{Kind::Const, 0, value, Expr(nullptr), Expr(nullptr)}));
}

Expr Expr::negate(Expr operand) {
  return Expr(std::shared_ptr<Node>(new Node{Kind::Not, 0, false, std::move(operand), Expr(nullptr)}));
}

Expr Expr::conj(Expr l, Expr r) {
  return Expr(std::shared_ptr<Node>(new Node{Kind::And, 0, false, std::move(l), std::move(r)}));
}

Expr Expr::disj(Expr l, Expr r) {
  return Expr(std::shared_ptr<Node>(new Node{Kind::Or, 0, false, std::move(l), std::move(r)}));
}

Expr Expr::exclusive(Expr l, Expr r) {
  return Expr(std::shared_ptr<Node>(new Node{Kind::Xor, 0, false, std::move(l), std::move(r)}));
}

Expr::Kind Expr::kind() const noexcept { return node_->kind; }

std::size_t Expr::var_index() const {
  if (node_->kind != Kind::Var) throw std::logic_error("not a Var node");
  return node_->index;
}

bool Expr::const_value() const {
  if (node_->kind != Kind::Const) throw std::logic_error("not a Const node");
  return node_->value;
}

const Expr& Expr::operand() const {
  if (node_->kind != Kind::Not) throw std::logic_error("not a Not node");
  return node_->a;
}

const Expr& Expr::left() const {
  if (node_->kind != Kind::And && node_->kind != Kind::Or && node_->kind != Kind::Xor) {
    throw std::logic_error("not a binary node");
  }
  return node_->a;
}

const Expr& Expr::right() const {
  left();
  return node_->b;
}

bool Expr::evaluate(std::uint64_t assignment, std::size_t n_vars) const {
  switch (node_->kind) {
    case Kind::Var:
      return ((assignment >> (n_vars - 1 - node_->index)) & 1u) != 0;
    case Kind::Const: return node_->value;
    case Kind::Not: return !node_->a.evaluate(assignment, n_vars);
    case Kind::And: return node_->a.evaluate(assignment, n_vars) && node_->b.evaluate(assignment, n_vars);
    case Kind::Or: return node_->a.evaluate(assignment, n_vars) || node_->b.evaluate(assignment, n_vars);
    case Kind::Xor: return node_->a.evaluate(assignment, n_vars) != node_->b.evaluate(assignment, n_vars);
  }
  return false;
}

bool Expr::evaluate(const std::vector<bool>& values) const {
  switch (node_->kind) {
    case Kind::Var: return values.at(node_->index);
    case Kind::Const: return node_->value;
    case Kind::Not: return !node_->a.evaluate(values);
    case Kind::And: return node_->a.evaluate(values) && node_->b.evaluate(values);
    case Kind::Or: return node_->a.evaluate(values) || node_->b.evaluate(values);
    case Kind::Xor: return node_->a.evaluate(values) != node_->b.evaluate(values);
  }
  return false;
}

std::size_t Expr::max_var_index_plus_one() const {
  switch (node_->kind) {
    case Kind::Var: return node_->index + 1;
    case Kind::Const: return 0;
    case Kind::Not: return node_->a.max_var_index_plus_one();
    default: return std::max(node_->a.max_var_index_plus_one(), node_->b.max_var_index_plus_one());
  }
}

std::string Expr::to_string() const {
  switch (node_->kind) {
    case Kind::Var: return "Var" + std::to_string(node_->index);
    case Kind::Const: return node_->value ? "Const(1)" : "Const(0)";
    case Kind::Not: return "Not(" + node_->a.to_string() + ")";
    case Kind::And: return "And(" + node_->a.to_string() + "," + node_->b.to_string() + ")";
    case Kind::Or: return "Or(" + node_->a.to_string() + "," + node_->b.to_string() + ")";
    case Kind::Xor: return "Xor(" + node_->a.to_string() + "," + node_->b.to_string() + ")";
  }
  return "?";
}

bool operator==(const Expr& x, const Expr& y) {
  if (x.node_ == y.node_) return true;
  if (!x.node_ || !y.node_) return false;
  const auto& a = *x.node_;
  const auto& b = *y.node_;
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::Var: return a.index == b.index;
    case Expr::Kind::Const: return a.value == b.value;
    case Expr::Kind::Not: return a.a == b.a;
    default: return a.a == b.a && a.b == b.b;
  }
}

// --- build_expression --------------------------------------------------------

namespace {

// Binding strength, higher binds tighter. NOT is handled as a prefix.
int precedence(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::And: return 4;
    case OperatorKind::Xor: return 3;
    case OperatorKind::Or: return 2;
    case OperatorKind::If: return 1;
    case OperatorKind::Not: return 5;
  }
  return 0;
}

Expr combine(OperatorKind kind, Expr lhs, Expr rhs) {
  switch (kind) {
    case OperatorKind::And: return Expr::conj(std::move(lhs), std::move(rhs));
    case OperatorKind::Xor: return Expr::exclusive(std::move(lhs), std::move(rhs));
    case OperatorKind::Or: return Expr::disj(std::move(lhs), std::move(rhs));
    // "L [if] R": the condition R implies the result L.
    case OperatorKind::If: return Expr::disj(Expr::negate(std::move(rhs)), std::move(lhs));
    case OperatorKind::Not: break;
  }
  throw std::logic_error("NOT is not a binary operator");
}

class ExprParser {
 public:
  explicit ExprParser(const Statement& s) : stmt_(s) {}

  Expr parse() { return parse_level(1); }

 private:
  Expr parse_operand() {
    std::size_t negations = 0;
    while (op_ < stmt_.operators.size() && stmt_.operators[op_].kind == OperatorKind::Not) {
      ++negations;
      ++op_;
    }
    Expr e = Expr::var(stmt_.clauses.at(clause_++).var_index);
    for (std::size_t i = 0; i < negations; ++i) e = Expr::negate(std::move(e));
    return e;
  }

  // Precedence climbing with left associativity.
  Expr parse_level(int min_prec) {
    Expr lhs = parse_operand();
    while (op_ < stmt_.operators.size()) {
      auto kind = stmt_.operators[op_].kind;
      int prec = precedence(kind);
      if (prec < min_prec) break;
      ++op_;
      Expr rhs = parse_level(prec + 1);
      lhs = combine(kind, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  const Statement& stmt_;
  std::size_t op_ = 0;
  std::size_t clause_ = 0;
};

}  // namespace

Expr build_expression(const Statement& statement) { return ExprParser(statement).parse(); }

// --- truth tables --------------------------------------------------------------

std::string TruthTable::to_string() const {
  std::string out;
  out.reserve(outputs.size());
  for (bool b : outputs) out.push_back(b ? '1' : '0');
  return out;
}

TruthTable TruthTable::from_string(std::string_view bits) {
  TruthTable t;
  while ((std::size_t{1} << t.n_vars) < bits.size()) ++t.n_vars;
  if ((std::size_t{1} << t.n_vars) != bits.size() || t.n_vars == 0 || t.n_vars > kMaxVariables) {
    throw std::invalid_argument("truth table length must be 2^n for n in [1,6]");
  }
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("truth table digits must be 0 or 1");
    t.outputs.push_back(c == '1');
  }
  return t;
}

TruthTable expression_to_truth_table(const Expr& expr, std::size_t n_vars) {
  if (n_vars == 0 || n_vars > kMaxVariables) {
    throw Error(ErrorCode::TooManyVariables, "n_vars must be in [1,6], got " + std::to_string(n_vars));
  }
  if (expr.max_var_index_plus_one() > n_vars) {
    throw Error(ErrorCode::VarIndexOutOfRange, "expression reads Var" +
                                                   std::to_string(expr.max_var_index_plus_one() - 1) +
                                                   " with n_vars=" + std::to_string(n_vars));
  }
  TruthTable t;
  t.n_vars = n_vars;
  t.outputs.resize(std::size_t{1} << n_vars);
  for (std::uint64_t a = 0; a < t.outputs.size(); ++a) t.outputs[a] = expr.evaluate(a, n_vars);
  return t;
}

// --- syn_gen ---------------------------------------------------------------------

SynGenResult syn_gen(std::string_view raw_text, const SynGenParams& params) {
  SynGenResult r;
  r.statement = extract(raw_text);
  for (auto& clause : r.statement.clauses) clause.digest = hash_substatement(clause.text, params.digest_bits);
  r.expression = build_expression(r.statement);
  r.table = expression_to_truth_table(r.expression, r.statement.clauses.size());
  r.minimized = minimize(r.table);
  return r;
}

}  // namespace zkfabric::syntax
