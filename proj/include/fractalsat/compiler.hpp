#pragma once

#include <string>
#include <vector>

#include "fractalsat/formula.hpp"
#include "fractalsat/kinematics.hpp"
#include "fractalsat/rulebook.hpp"

namespace fractalsat {

// One module's contribution to the initial beam: base names in textual
// order.  Textual order maps left-to-right in space; the last listed signal
// sits closest to 0 and therefore acts first.
struct Block {
  std::vector<std::string> bases;

  Block& operator+=(const Block& o) {
    bases.insert(bases.end(), o.bases.begin(), o.bases.end());
    return *this;
  }
  std::size_t size() const { return bases.size(); }
};

inline Block operator+(Block a, const Block& b) { return a += b; }

namespace detail {

inline void emit_rep(Block& b, const std::string& base, int count) {
  for (int i = 0; i < count; ++i) b.bases.push_back(base);
}

// Postfix code for a subtree, trailed by k inhibitors that shield the
// subtree's result while it crosses a sibling beam.
inline void compile_cc_rec(const Formula& f, int node, int k, Block& out) {
  const auto& n = f.nodes[node];
  switch (n.op) {
    case Formula::Op::and_:
    case Formula::Op::or_:
      out.bases.push_back(n.op == Formula::Op::and_ ? "and" : "or");
      emit_rep(out, "gamma", k);
      compile_cc_rec(f, n.a, 0, out);
      compile_cc_rec(f, n.b, ncon(f, n.a), out);
      break;
    case Formula::Op::not_:
      out.bases.push_back("not");
      emit_rep(out, "gamma", k);
      compile_cc_rec(f, n.a, 0, out);
      break;
    case Formula::Op::var:
      out.bases.push_back("x");
      emit_rep(out, "beta", n.var - 1);
      emit_rep(out, "gamma", k);
      break;
  }
}

}  // namespace detail

inline Block compile_cc(const Formula& f, int k = 0) {
  Block b;
  detail::compile_cc_rec(f, f.root, k, b);
  return b;
}

// Structural count of what compile_cc emits: tree nodes, one beta per
// variable occurrence below its own level, and all inhibitors.
inline std::size_t compile_cc_size(const Formula& f, int node = -1, int k = 0) {
  if (node < 0) node = f.root;
  const auto& n = f.nodes[node];
  switch (n.op) {
    case Formula::Op::and_:
    case Formula::Op::or_:
      return 1 + k + compile_cc_size(f, n.a, 0) + compile_cc_size(f, n.b, ncon(f, n.a));
    case Formula::Op::not_:
      return 1 + k + compile_cc_size(f, n.a, 0);
    case Formula::Op::var:
      return 1 + (n.var - 1) + k;
  }
  return 0;
}

inline Block block_until(int m) {
  if (m < 1) throw PreconditionError("until: need at least one level");
  Block b;
  b.bases.push_back("stop");
  detail::emit_rep(b, "stopaux", m - 1);
  return b;
}

inline Block block_decide(int n) {
  Block b;
  detail::emit_rep(b, "a", n);
  return b;
}

inline Block block_store() {
  Block b;
  b.bases.push_back("s");
  return b;
}

inline Block block_map_sat(const Formula& f) { return block_store() + compile_cc(f); }

inline Block block_var(int i) {
  Block b;
  b.bases.push_back("x");
  detail::emit_rep(b, "beta", i - 1);
  return b;
}

// Aggregation trigger, then the quantifiers innermost first so the
// outermost one is placed first.
inline Block block_reduce_qsat(const std::vector<Quant>& prefix) {
  Block b;
  b.bases.push_back("c");
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it)
    b.bases.push_back(*it == Quant::exists ? "exists" : "forall");
  return b;
}

inline Block block_reduce_sharpsat(int n) {
  Block b;
  b.bases.push_back("addhi0");
  b.bases.push_back("addlo0");
  b.bases.push_back("zero0");
  detail::emit_rep(b, "add", n);
  return b;
}

inline Block block_reduce_enumsat(int n) {
  Block b;
  b.bases.push_back("v");
  for (int i = 1; i <= n; ++i) b += block_var(i);
  b.bases.push_back("v");
  return b;
}

inline Block problem_beam(Problem p, const Formula& f) {
  int n = f.nvars;
  Block reduce;
  switch (p) {
    case Problem::qsat:
      if (!f.closed()) throw PreconditionError("qsat needs a quantifier prefix");
      reduce = block_reduce_qsat(f.prefix);
      break;
    case Problem::sharpsat:
      reduce = block_reduce_sharpsat(n);
      break;
    case Problem::enumsat:
      reduce = block_reduce_enumsat(n);
      break;
  }
  return reduce + block_map_sat(f) + block_decide(n) + block_until(n + 1);
}

// Wall seed plus the spawn beam at uniform spacing delta = 1/(8 (count+1)):
// the whole beam sits inside (-1/8, 0), which also satisfies the stricter
// (-1/6, 0) constraint on the cut-off trigger.
inline Configuration assemble_config(Problem p, const Formula& f, const RuleSet& rs) {
  Block beam = problem_beam(p, f);
  Configuration cfg;
  const MetaTable& mt = rs.metas;
  int count = static_cast<int>(beam.size());
  Rational delta(1, 8LL * (count + 1));
  for (int i = 0; i < count; ++i) {
    Rational pos = -delta * Rational(count - i);
    if (beam.bases[i] == "stop" &&
        !(Rational(-1, 6) < pos && pos < Rational(0)))
      throw PreconditionError("assemble: cut-off trigger left the required window");
    cfg.place(pos, mt.find("->" + beam.bases[i]), mt);
  }
  cfg.place(Rational(0), mt.find("wall"), mt);
  cfg.place(Rational(0), mt.find("->start"), mt);
  cfg.place(Rational(0), mt.find("=>start"), mt);
  cfg.place(Rational(1), mt.find("wall"), mt);
  return cfg;
}

}  // namespace fractalsat
