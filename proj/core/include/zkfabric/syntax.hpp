#pragma once

// Composite-statement front end: bracket-marker extraction, clause hashing,
// Boolean expression construction, truth tables and two-level minimization.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "zkfabric/bytes.hpp"

namespace zkfabric::syntax {

inline constexpr std::size_t kMaxVariables = 6;

enum class OperatorKind { If, And, Or, Xor, Not };

std::string_view to_string(OperatorKind kind) noexcept;

struct OperatorToken {
  OperatorKind kind;
  std::string marker;  // exactly as written in the source, e.g. "[if]"

  friend bool operator==(const OperatorToken&, const OperatorToken&) = default;
};

struct SubStatement {
  std::string text;
  Bytes digest;
  std::size_t var_index = 0;
};

// `[not]` is a prefix marker on the clause that follows it; every other
// marker separates two clauses, so binary_operator_count() == clauses - 1.
struct Statement {
  std::string raw_text;
  std::vector<SubStatement> clauses;
  std::vector<OperatorToken> operators;

  std::size_t binary_operator_count() const;
  // Clauses and markers joined with single spaces.
  std::string rejoin() const;
};

Statement extract(std::string_view raw_text);

// SHA-256 of the UTF-8 text truncated to its first `digest_bits` bits
// (128 or 256).
Bytes hash_substatement(std::string_view text, std::size_t digest_bits);

class Expr {
 public:
  enum class Kind { Var, Not, And, Or, Xor, Const };

  Expr();  // Const(0)

  static Expr var(std::size_t index);
  static Expr constant(bool value);
  static Expr negate(Expr operand);
  static Expr conj(Expr left, Expr right);
  static Expr disj(Expr left, Expr right);
  static Expr exclusive(Expr left, Expr right);

  Kind kind() const noexcept;
  std::size_t var_index() const;
  bool const_value() const;
  // Not: operand(); binary nodes: left()/right().
  const Expr& operand() const;
  const Expr& left() const;
  const Expr& right() const;

  // Variable 0 is the most significant bit of `assignment`.
  bool evaluate(std::uint64_t assignment, std::size_t n_vars) const;
  bool evaluate(const std::vector<bool>& values) const;
  std::size_t max_var_index_plus_one() const;

  // Constructor-style rendering, e.g. "Or(Not(And(Var1,Var2)),Var0)".
  std::string to_string() const;

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

Expr build_expression(const Statement& statement);

struct TruthTable {
  std::size_t n_vars = 0;
  std::vector<bool> outputs;  // indexed by assignment, variable 0 is MSB

  bool operator[](std::uint64_t assignment) const { return outputs[assignment]; }
  // e.g. "0110"
  std::string to_string() const;
  static TruthTable from_string(std::string_view bits);

  friend bool operator==(const TruthTable&, const TruthTable&) = default;
};

TruthTable expression_to_truth_table(const Expr& expr, std::size_t n_vars);

// A product term: for each variable, required 0, required 1, or don't-care.
struct Implicant {
  std::uint8_t care = 0;   // bit (n-1-i) set when variable i is fixed
  std::uint8_t value = 0;  // fixed polarities, same bit layout

  bool covers(std::uint64_t assignment) const { return (assignment & care) == value; }
  std::size_t literal_count() const;
  std::string to_string(std::size_t n_vars) const;  // e.g. "-01"
  static Implicant from_string(std::string_view pattern);

  friend bool operator==(const Implicant&, const Implicant&) = default;
};

struct MinimizedExpr {
  std::size_t n_vars = 0;
  std::vector<Implicant> implicants;  // sorted by canonical pattern string

  bool evaluate(std::uint64_t assignment) const;
  std::size_t literal_count() const;
  // Canonical SOP: patterns joined by " + ", "0" for the empty cover.
  std::string to_string() const;
  // Human form, e.g. "v0 + ~v1 + ~v2".
  std::string to_literal_string() const;
  Expr to_expr() const;
};

// Quine-McCluskey prime generation, then Petrick's method for the cover.
// Minimal implicant count first, then literal count, then the
// lexicographically smallest sorted pattern list.
MinimizedExpr minimize(const TruthTable& table);

struct SynGenParams {
  std::size_t digest_bits = 256;
};

struct SynGenResult {
  Statement statement;
  Expr expression;
  TruthTable table;
  MinimizedExpr minimized;
};

SynGenResult syn_gen(std::string_view raw_text, const SynGenParams& params = {});

}  // namespace zkfabric::syntax
