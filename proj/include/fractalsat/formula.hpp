#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "fractalsat/errors.hpp"

namespace fractalsat {

enum class Quant { exists, forall };

// Prenex QBF: an ordered quantifier prefix over x1..xn plus a matrix over
// {and, or, not, var}.  Pure-SAT problems use an empty prefix with an
// explicit variable count.
struct Formula {
  enum class Op { var, not_, and_, or_ };
  struct Node {
    Op op;
    int a = -1;   // operand (not_) / left operand
    int b = -1;   // right operand
    int var = 0;  // 1-based variable index for Op::var
  };

  std::vector<Quant> prefix;
  std::vector<Node> nodes;
  int root = -1;
  int nvars = 0;

  bool closed() const { return !prefix.empty(); }
};

// Number of connective occurrences in the subtree (the whole matrix by default).
inline int ncon(const Formula& f, int node = -1) {
  if (node < 0) node = f.root;
  const auto& n = f.nodes[node];
  switch (n.op) {
    case Formula::Op::var: return 0;
    case Formula::Op::not_: return 1 + ncon(f, n.a);
    case Formula::Op::and_:
    case Formula::Op::or_: return 1 + ncon(f, n.a) + ncon(f, n.b);
  }
  return 0;
}

inline bool eval_matrix(const Formula& f, const std::vector<bool>& bits, int node = -1) {
  if (node < 0) node = f.root;
  const auto& n = f.nodes[node];
  switch (n.op) {
    case Formula::Op::var: return bits[n.var - 1];
    case Formula::Op::not_: return !eval_matrix(f, bits, n.a);
    case Formula::Op::and_:
      return eval_matrix(f, bits, n.a) && eval_matrix(f, bits, n.b);
    case Formula::Op::or_:
      return eval_matrix(f, bits, n.a) || eval_matrix(f, bits, n.b);
  }
  return false;
}

namespace detail {

class FormulaParser {
public:
  explicit FormulaParser(std::string_view text, int vars_hint)
      : text_(text), vars_hint_(vars_hint) {}

  Formula parse() {
    skip_ws();
    while (peek() == 'E' || peek() == 'A') {
      char q = take();
      if (!std::isspace(static_cast<unsigned char>(peek())))
        fail("expected whitespace after quantifier");
      int v = parse_var();
      f_.prefix.push_back(q == 'E' ? Quant::exists : Quant::forall);
      if (v != static_cast<int>(f_.prefix.size()))
        fail("quantifier " + std::to_string(f_.prefix.size()) + " must bind x" +
             std::to_string(f_.prefix.size()));
      skip_ws();
    }
    if (take() != ':') fail("expected ':' before the matrix");
    f_.root = parse_or();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    if (f_.closed()) {
      f_.nvars = static_cast<int>(f_.prefix.size());
    } else {
      f_.nvars = std::max(vars_hint_, max_var_);
    }
    if (max_var_ > f_.nvars) fail("unbound variable x" + std::to_string(max_var_));
    if (f_.nvars < 1) fail("formula binds no variables");
    return std::move(f_);
  }

private:
  int parse_or() {
    int a = parse_and();
    skip_ws();
    while (peek() == '|') {
      take();
      int b = parse_and();
      a = add({Formula::Op::or_, a, b, 0});
      skip_ws();
    }
    return a;
  }

  int parse_and() {
    int a = parse_factor();
    skip_ws();
    while (peek() == '&') {
      take();
      int b = parse_factor();
      a = add({Formula::Op::and_, a, b, 0});
      skip_ws();
    }
    return a;
  }

  int parse_factor() {
    skip_ws();
    char c = peek();
    if (c == '!') {
      take();
      int a = parse_factor();
      return add({Formula::Op::not_, a, -1, 0});
    }
    if (c == '(') {
      take();
      int a = parse_or();
      skip_ws();
      if (take() != ')') fail("expected ')'");
      return a;
    }
    int v = parse_var();
    if (!f_.prefix.empty() && v > static_cast<int>(f_.prefix.size()))
      fail("unbound variable x" + std::to_string(v));
    return add({Formula::Op::var, -1, -1, v});
  }

  int parse_var() {
    skip_ws();
    if (peek() != 'x') fail("expected a variable like x1");
    take();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a variable index");
    long idx = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      idx = idx * 10 + (take() - '0');
      if (idx > 1'000'000) fail("variable index out of range");
    }
    if (idx < 1) fail("variable indices start at x1");
    max_var_ = std::max(max_var_, static_cast<int>(idx));
    return static_cast<int>(idx);
  }

  int add(Formula::Node n) {
    f_.nodes.push_back(n);
    return static_cast<int>(f_.nodes.size() - 1);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char take() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        col_base_ = pos_ + 1;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_, static_cast<int>(pos_ - col_base_) + 1);
  }

  std::string_view text_;
  int vars_hint_;
  std::size_t pos_ = 0;
  int line_ = 1;
  std::size_t col_base_ = 0;
  int max_var_ = 0;
  Formula f_;
};

}  // namespace detail

// Grammar: [prefix] ':' expr with prefix a list of "E xK" / "A xK" entries
// binding x1..xn in order; '|' binds loosest, '!' tightest.  For an empty
// prefix, vars_hint (from --vars) fixes the variable count.
inline Formula parse_formula(std::string_view text, int vars_hint = 0) {
  return detail::FormulaParser(text, vars_hint).parse();
}

inline std::string format_formula(const Formula& f) {
  std::string out;
  for (std::size_t i = 0; i < f.prefix.size(); ++i)
    out += std::string(f.prefix[i] == Quant::exists ? "E x" : "A x") +
           std::to_string(i + 1) + " ";
  out += ": ";
  // Emit fully parenthesized; parse(format(f)) reproduces the tree.
  auto rec = [&](auto&& self, int node) -> std::string {
    const auto& n = f.nodes[node];
    switch (n.op) {
      case Formula::Op::var: return "x" + std::to_string(n.var);
      case Formula::Op::not_: return "!" + self(self, n.a);
      case Formula::Op::and_:
        return "(" + self(self, n.a) + " & " + self(self, n.b) + ")";
      case Formula::Op::or_:
        return "(" + self(self, n.a) + " | " + self(self, n.b) + ")";
    }
    return "";
  };
  out += rec(rec, f.root);
  return out;
}

// Exhaustive recursion over the prefix; the independent reference for the
// machine's verdict.
inline bool oracle_qsat(const Formula& f) {
  if (!f.closed()) throw PreconditionError("oracle_qsat: formula must be closed");
  std::vector<bool> bits(f.nvars, false);
  auto rec = [&](auto&& self, int depth) -> bool {
    if (depth == f.nvars) return eval_matrix(f, bits);
    bits[depth] = false;
    bool fv = self(self, depth + 1);
    bits[depth] = true;
    bool tv = self(self, depth + 1);
    return f.prefix[depth] == Quant::exists ? (fv || tv) : (fv && tv);
  };
  return rec(rec, 0);
}

inline unsigned long long oracle_count(const Formula& f) {
  unsigned long long count = 0;
  std::vector<bool> bits(f.nvars);
  for (unsigned long long mask = 0; mask < (1ull << f.nvars); ++mask) {
    for (int i = 0; i < f.nvars; ++i) bits[i] = (mask >> i) & 1;
    if (eval_matrix(f, bits)) ++count;
  }
  return count;
}

inline std::vector<std::vector<bool>> oracle_enum(const Formula& f) {
  std::vector<std::vector<bool>> out;
  std::vector<bool> bits(f.nvars);
  for (unsigned long long mask = 0; mask < (1ull << f.nvars); ++mask) {
    for (int i = 0; i < f.nvars; ++i) bits[i] = (mask >> i) & 1;
    if (eval_matrix(f, bits)) out.push_back(bits);
  }
  return out;
}

}  // namespace fractalsat
