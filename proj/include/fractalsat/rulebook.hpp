#pragma once

#include <string>
#include <vector>

#include "fractalsat/rules.hpp"

// The complete rule catalogs for the three machines (Q-SAT, #SAT, ENUM-SAT)
// plus the stand-alone "compute the middle" machine.  Rules are written for
// one side only; mirror_close supplies the other side.  Base-name legend:
//
//   wall, start, startoff   fractal construction and its disabled variant
//   stop, stopaux           fractal cut-off module
//   a                       decision-point activator
//   x, xoff, beta           variable carrier, disabled decision point, delay
//   gamma, gammap           result inhibitor and its reflected form
//   and/or/not (+p, +z)     connectives: fresh, half-applied, skipping
//   t, f, tp, fp            truth carriers and half-applied results
//   T, F                    activated truth values (post reflection)
//   s                       result-storage trigger
//   c                       aggregation trigger
//   exists/forall (+L/R)    quantifier carriers and placed aggregators
//   add, addL*/addR*        adder carrier and placed adder cells
//   zero, one               binary digits (lsb emitted first)
//   addlo, addhi            digit-stream end markers (lo then hi)
//   zero0, addlo0, addhi0   readers that convert a stored leaf into a stream
//   v, v0, v1               assignment-beam brackets and walkers

namespace fractalsat {

enum class Problem { qsat, sharpsat, enumsat };

inline const char* problem_name(Problem p) {
  switch (p) {
    case Problem::qsat: return "qsat";
    case Problem::sharpsat: return "sharpsat";
    case Problem::enumsat: return "enumsat";
  }
  return "?";
}

// Stand-alone two-rule machine that halts a stationary mark exactly halfway
// between the walls.
inline RuleSet middle_rules() {
  RuleSet rs;
  rs.add({hi_r("start"), stat("wall")}, {hi_l("start"), stat("wall")},
         "middle.bounce", "middle machine: fast probe bounces at the wall");
  rs.add({lo_r("start"), hi_l("start")}, {stat("start")},
         "middle.meet", "middle machine: probes meet halfway and halt");
  return mirror_close(rs);
}

// ---- fractal construction ------------------------------------------------

inline void add_fractal_rules(RuleSet& rs) {
  rs.add({stat("wall"), hi_l("start")}, {stat("wall"), hi_r("start")},
         "fractal.bounce", "fractal: constructor wave bounces at the wall");
  rs.add({lo_r("start"), hi_l("start")},
         {hi_l("start"), lo_l("start"), stat("start"), lo_r("start"), hi_r("start")},
         "fractal.split",
         "fractal: waves cross, mark the midpoint, relaunch both halves");
  // Shared with the cut-off module: a neutered constructor meets the fast
  // wave and both vanish, ending the recursion locally.
  rs.add({hi_r("start"), lo_l("startoff")}, {},
         "fractal.annihilate", "fractal: disabled constructor pair cancels");
}

inline RuleSet fractal_rules() {
  RuleSet rs;
  add_fractal_rules(rs);
  return mirror_close(rs);
}

// ---- until: stop the fractal after a fixed number of levels ---------------

inline void add_until_rules(RuleSet& rs) {
  rs.add({hi_r("stopaux"), lo_l("start")}, {lo_l("startoff"), hi_r("stopaux")},
         "until.aux.dim", "cut-off: inhibitor disables the descending constructor");
  rs.add({hi_r("stopaux"), stat("start")}, {stat("startoff")},
         "until.aux.claim", "cut-off: first inhibitor dies disabling the midpoint");
  rs.add({hi_r("stopaux"), stat("startoff")},
         {lo_l("stopaux"), stat("startoff"), lo_r("stopaux")},
         "until.aux.split", "cut-off: later inhibitors split at a disabled midpoint");
  rs.add({hi_r("stop"), lo_l("start")}, {lo_l("startoff"), hi_r("stop")},
         "until.stop.dim", "cut-off: stop disables the descending constructor");
  rs.add({hi_r("stop"), lo_l("startoff")}, {lo_l("start"), hi_r("stop")},
         "until.stop.relight", "cut-off: stop re-enables a constructor dimmed above it");
  rs.add({hi_r("stop"), stat("startoff")},
         {lo_l("stop"), stat("start"), lo_r("stop")},
         "until.stop.split", "cut-off: stop restores the midpoint and splits");
  rs.add({hi_r("stop"), stat("start")}, {stat("start"), hi_r("stop")},
         "until.stop.pass", "cut-off: stop crosses an untouched midpoint");
  rs.add({hi_r("stop"), lo_r("start")}, {lo_r("startoff")},
         "until.stop.kill", "cut-off: stop overtakes and disables the last constructor");
  rs.add({hi_r("start"), lo_l("startoff")}, {},
         "until.annihilate", "cut-off: disabled constructor pair cancels");
}

inline RuleSet until_rules() {
  RuleSet rs;
  add_until_rules(rs);
  return rs;
}

// ---- decide: turn midpoints into decision points ---------------------------

inline void add_decide_rules(RuleSet& rs) {
  rs.add({hi_r("a"), stat("start")}, {stat("x")},
         "decide.claim", "decision setup: first activator converts the midpoint");
  rs.add({hi_r("a"), stat("x")}, {lo_l("a"), stat("x"), lo_r("a")},
         "decide.split", "decision setup: later activators split and continue");
}

inline RuleSet decide_rules() {
  RuleSet rs;
  add_decide_rules(rs);
  return rs;
}

// ---- var: delay a variable to its own level, then assign it ----------------

inline void add_var_rules(RuleSet& rs) {
  rs.add({hi_r("beta"), stat("x")}, {stat("xoff")},
         "var.off", "variable delay: first delay signal disables the decision point");
  rs.add({hi_r("beta"), stat("xoff")}, {lo_l("beta"), stat("xoff"), lo_r("beta")},
         "var.delay.split", "variable delay: later delay signals split and continue");
  rs.add({hi_r("x"), stat("x")}, {lo_l("f"), stat("x"), lo_r("t")},
         "var.assign", "variable: false branch to the left, true branch to the right");
  rs.add({hi_r("x"), stat("xoff")}, {lo_l("x"), stat("x"), lo_r("x")},
         "var.restore", "variable: re-enable the decision point and pass through");
}

inline RuleSet var_rules() {
  RuleSet rs;
  add_var_rules(rs);
  return rs;
}

// ---- eval: postfix evaluation of the compiled matrix -----------------------

inline void add_eval_rules(RuleSet& rs) {
  const std::string p = "evaluation";
  rs.add({hi_r("t"), stat("start")}, {lo_l("T"), stat("start")},
         "eval.reflect.t", p + ": truth value activates at the evaluation level");
  rs.add({hi_r("f"), stat("start")}, {lo_l("F"), stat("start")},
         "eval.reflect.f", p + ": truth value activates at the evaluation level");
  rs.add({hi_r("gamma"), stat("start")}, {lo_l("gammap"), stat("start")},
         "eval.reflect.gamma", p + ": inhibitor reflects ahead of its result");

  rs.add({hi_r("and"), lo_l("T")}, {hi_r("andp")}, "eval.and.T",
         p + ": conjunction absorbs a true operand");
  rs.add({hi_r("and"), lo_l("F")}, {hi_r("fp")}, "eval.and.F",
         p + ": conjunction short-circuits on a false operand");
  rs.add({hi_r("fp"), lo_l("T")}, {hi_r("f")}, "eval.fp.T",
         p + ": pending false consumes the remaining operand");
  rs.add({hi_r("fp"), lo_l("F")}, {hi_r("f")}, "eval.fp.F",
         p + ": pending false consumes the remaining operand");
  rs.add({hi_r("andp"), lo_l("T")}, {hi_r("t")}, "eval.andp.T",
         p + ": conjunction completes true");
  rs.add({hi_r("andp"), lo_l("F")}, {hi_r("f")}, "eval.andp.F",
         p + ": conjunction completes false");

  rs.add({hi_r("or"), lo_l("T")}, {hi_r("tp")}, "eval.or.T",
         p + ": disjunction short-circuits on a true operand");
  rs.add({hi_r("or"), lo_l("F")}, {hi_r("orp")}, "eval.or.F",
         p + ": disjunction absorbs a false operand");
  rs.add({hi_r("tp"), lo_l("T")}, {hi_r("t")}, "eval.tp.T",
         p + ": pending true consumes the remaining operand");
  rs.add({hi_r("tp"), lo_l("F")}, {hi_r("t")}, "eval.tp.F",
         p + ": pending true consumes the remaining operand");
  rs.add({hi_r("orp"), lo_l("T")}, {hi_r("t")}, "eval.orp.T",
         p + ": disjunction completes true");
  rs.add({hi_r("orp"), lo_l("F")}, {hi_r("f")}, "eval.orp.F",
         p + ": disjunction completes false");

  rs.add({hi_r("not"), lo_l("T")}, {hi_r("f")}, "eval.not.T", p + ": negation");
  rs.add({hi_r("not"), lo_l("F")}, {hi_r("t")}, "eval.not.F", p + ": negation");

  rs.add({hi_r("and"), lo_l("gammap")}, {hi_r("andz")}, "eval.and.inhibit",
         p + ": inhibitor arms the connective to skip one result");
  rs.add({hi_r("or"), lo_l("gammap")}, {hi_r("orz")}, "eval.or.inhibit",
         p + ": inhibitor arms the connective to skip one result");
  rs.add({hi_r("not"), lo_l("gammap")}, {hi_r("notz")}, "eval.not.inhibit",
         p + ": inhibitor arms the connective to skip one result");

  rs.add({hi_r("andz"), lo_l("T")}, {lo_l("T"), hi_r("and")}, "eval.andz.T",
         p + ": armed connective lets a foreign result pass");
  rs.add({hi_r("andz"), lo_l("F")}, {lo_l("F"), hi_r("and")}, "eval.andz.F",
         p + ": armed connective lets a foreign result pass");
  rs.add({hi_r("orz"), lo_l("T")}, {lo_l("T"), hi_r("or")}, "eval.orz.T",
         p + ": armed connective lets a foreign result pass");
  rs.add({hi_r("orz"), lo_l("F")}, {lo_l("F"), hi_r("or")}, "eval.orz.F",
         p + ": armed connective lets a foreign result pass");
  rs.add({hi_r("notz"), lo_l("T")}, {lo_l("T"), hi_r("not")}, "eval.notz.T",
         p + ": armed connective lets a foreign result pass");
  rs.add({hi_r("notz"), lo_l("F")}, {lo_l("F"), hi_r("not")}, "eval.notz.F",
         p + ": armed connective lets a foreign result pass");
}

inline RuleSet eval_rules() {
  RuleSet rs;
  add_eval_rules(rs);
  return rs;
}

// ---- store: park the computed value as the level stationary ----------------

inline void add_store_rules(RuleSet& rs) {
  rs.add({hi_r("s"), lo_l("T")}, {hi_r("T")}, "store.catch.T",
         "storage: trigger turns the final result around");
  rs.add({hi_r("s"), lo_l("F")}, {hi_r("F")}, "store.catch.F",
         "storage: trigger turns the final result around");
  rs.add({hi_r("T"), stat("start")}, {stat("t")}, "store.park.t",
         "storage: result replaces the evaluation stationary");
  rs.add({hi_r("F"), stat("start")}, {stat("f")}, "store.park.f",
         "storage: result replaces the evaluation stationary");
}

inline RuleSet store_rules() {
  RuleSet rs;
  add_store_rules(rs);
  return rs;
}

// ---- reduce for Q-SAT: quantifier placement and aggregation ----------------

inline void add_qsat_reduce_rules(RuleSet& rs) {
  const std::string p = "qsat reduce";
  rs.add({stat("x"), hi_l("exists")}, {stat("existsR")}, "qsat.setup.existsR",
         p + ": quantifier arriving leftward sends its result right");
  rs.add({hi_r("exists"), stat("x")}, {stat("existsL")}, "qsat.setup.existsL",
         p + ": quantifier arriving rightward sends its result left");
  rs.add({stat("x"), hi_l("forall")}, {stat("forallR")}, "qsat.setup.forallR",
         p + ": quantifier arriving leftward sends its result right");
  rs.add({hi_r("forall"), stat("x")}, {stat("forallL")}, "qsat.setup.forallL",
         p + ": quantifier arriving rightward sends its result left");

  // Deeper quantifiers are decelerated and split by placed ones.
  for (const std::string q : {"exists", "forall"})
    for (const std::string st : {"existsL", "existsR", "forallL", "forallR"})
      rs.add({hi_r(q), stat(st)}, {lo_l(q), stat(st), lo_r(q)},
             "qsat.desc." + q + "." + st,
             p + ": deeper quantifier splits at a placed one");

  rs.add({hi_r("c"), stat("t")}, {lo_l("t")}, "qsat.collect.t",
         p + ": trigger releases a stored leaf value");
  rs.add({hi_r("c"), stat("f")}, {lo_l("f")}, "qsat.collect.f",
         p + ": trigger releases a stored leaf value");

  // Pairwise aggregation at a placed quantifier; the cell is consumed and
  // the combined value leaves in the cell's direction.
  struct Agg {
    const char* st;
    bool conj;
    bool left;
  };
  for (const Agg agg : {Agg{"existsL", false, true}, Agg{"existsR", false, false},
                        Agg{"forallL", true, true}, Agg{"forallR", true, false}}) {
    for (bool lv : {true, false}) {
      for (bool rv : {true, false}) {
        bool res = agg.conj ? (lv && rv) : (lv || rv);
        auto tf = [](bool b) { return std::string(b ? "t" : "f"); };
        rs.add({lo_r(tf(lv)), stat(agg.st), lo_l(tf(rv))},
               {agg.left ? lo_l(tf(res)) : lo_r(tf(res))},
               std::string("qsat.agg.") + agg.st + "." + (lv ? "t" : "f") + (rv ? "t" : "f"),
               p + ": combine child results and forward");
      }
    }
  }
}

inline RuleSet qsat_reduce_rules() {
  RuleSet rs;
  add_qsat_reduce_rules(rs);
  return rs;
}

// ---- reduce for #SAT: a binary adder at every decision point ---------------
//
// Digit streams are emitted least-significant first and terminated by an
// addlo then an addhi marker.  A carry pending when the addlo markers meet
// is flushed as an extra digit: the digit leaves fast and falls back to lo
// speed on the opposing addhi marker, so it stays behind the slow addlo of
// its own stream and digit order is preserved.  When the addhi markers meet,
// the cell dissolves and one addhi continues outward.

inline void add_sharpsat_rules(RuleSet& rs) {
  const std::string p = "sharpsat reduce";
  rs.add({hi_r("add"), stat("x")}, {stat("addL0")}, "sharp.claim",
         p + ": first adder carrier converts the decision point");
  rs.add({hi_r("add"), stat("addL0")}, {lo_l("add"), stat("addL0"), lo_r("add")},
         "sharp.desc.L", p + ": deeper adder carriers split at a placed cell");
  rs.add({hi_r("add"), stat("addR0")}, {lo_l("add"), stat("addR0"), lo_r("add")},
         "sharp.desc.R", p + ": deeper adder carriers split at a placed cell");

  rs.add({hi_r("zero0"), stat("t")}, {lo_l("one"), stat("t")}, "sharp.read.digit.t",
         p + ": reader emits the leaf's digit");
  rs.add({hi_r("zero0"), stat("f")}, {lo_l("zero"), stat("f")}, "sharp.read.digit.f",
         p + ": reader emits the leaf's digit");
  rs.add({hi_r("addlo0"), stat("t")}, {lo_l("addlo"), stat("t")}, "sharp.read.lo.t",
         p + ": reader emits the low end marker");
  rs.add({hi_r("addlo0"), stat("f")}, {lo_l("addlo"), stat("f")}, "sharp.read.lo.f",
         p + ": reader emits the low end marker");
  rs.add({hi_r("addhi0"), stat("t")}, {lo_l("addhi")}, "sharp.read.hi.t",
         p + ": last reader emits the high end marker and retires the leaf");
  rs.add({hi_r("addhi0"), stat("f")}, {lo_l("addhi")}, "sharp.read.hi.f",
         p + ": last reader emits the high end marker and retires the leaf");

  // Serial addition; rules are written for a cell that outputs rightward.
  auto dig = [](int b) { return std::string(b ? "one" : "zero"); };
  auto cell = [](int c) { return std::string(c ? "addR1" : "addR0"); };
  for (int c : {0, 1}) {
    for (int l : {0, 1}) {
      for (int r : {0, 1}) {
        int sum = l + r + c;
        rs.add({lo_r(dig(l)), stat(cell(c)), lo_l(dig(r))},
               {stat(cell(sum >> 1)), lo_r(dig(sum & 1))},
               "sharp.add.c" + std::to_string(c) + "." + std::to_string(l) +
                   std::to_string(r),
               p + ": full-adder step");
      }
      // Right stream exhausted (its addlo marker arrives with a left digit).
      int sum = l + c;
      rs.add({lo_r(dig(l)), stat(cell(c)), lo_l("addlo")},
             {stat(cell(sum >> 1)), lo_r(dig(sum & 1))},
             "sharp.add.c" + std::to_string(c) + "." + std::to_string(l) + "lo",
             p + ": add against an exhausted stream");
      // Lone left digit, right stream gone entirely.
      rs.add({lo_r(dig(l)), stat(cell(c))}, {stat(cell(sum >> 1)), lo_r(dig(sum & 1))},
             "sharp.add.c" + std::to_string(c) + "." + std::to_string(l) + "solo",
             p + ": add a lone digit");
    }
  }

  rs.add({lo_r("addlo"), stat("addR0"), lo_l("addlo")}, {stat("addR0"), lo_r("addlo")},
         "sharp.add.lolo.c0", p + ": streams end together, no carry");
  rs.add({lo_r("addlo"), stat("addR1"), lo_l("addlo")},
         {stat("addR0"), hi_r("one"), lo_r("addlo")},
         "sharp.add.lolo.c1", p + ": streams end together, carry flushed fast");
  rs.add({lo_r("addlo"), stat("addR0")}, {stat("addR0"), lo_r("addlo")},
         "sharp.add.lo.c0", p + ": lone end marker, no carry");
  rs.add({lo_r("addlo"), stat("addR1")}, {stat("addR0"), hi_r("one"), lo_r("addlo")},
         "sharp.add.lo.c1", p + ": lone end marker, carry flushed fast");

  rs.add({hi_r("one"), lo_l("addhi")}, {lo_l("addhi"), lo_r("one")},
         "sharp.decel.digit", p + ": flushed carry falls back to carrier speed");
  rs.add({hi_r("addlo"), lo_l("addhi")}, {lo_l("addhi"), lo_r("addlo")},
         "sharp.decel.marker", p + ": fast end marker falls back to carrier speed");

  rs.add({lo_r("addhi"), stat("addR0")}, {lo_r("addhi")}, "sharp.add.hi",
         p + ": high marker dissolves the spent cell");
  rs.add({lo_r("addhi"), stat("addR0"), lo_l("addhi")}, {lo_r("addhi")},
         "sharp.add.hihi", p + ": high markers meet, cell dissolves, one continues");
}

inline RuleSet sharpsat_rules() {
  RuleSet rs;
  add_sharpsat_rules(rs);
  return rs;
}

// ---- reduce for ENUM-SAT: store satisfying assignments as stationary beams -

inline void add_enumsat_rules(RuleSet& rs) {
  const std::string p = "enumsat reduce";
  rs.add({hi_r("v"), stat("t")}, {lo_l("v1"), stat("v")}, "enum.claim.sat",
         p + ": satisfied leaf opens a beam and sends a collector");
  rs.add({lo_r("v1"), hi_l("t")}, {stat("t"), lo_r("v1")}, "enum.keep.t",
         p + ": collector parks a replayed bit");
  rs.add({hi_r("v"), stat("f")}, {lo_l("v0")}, "enum.claim.unsat",
         p + ": failed leaf is erased and an eater is sent");
  rs.add({lo_r("v0"), hi_l("t")}, {lo_r("v0")}, "enum.drop.t",
         p + ": eater swallows a replayed bit");
  rs.add({lo_r("v1"), hi_l("v")}, {stat("v")}, "enum.seal",
         p + ": collector seals the beam with the closing bracket");
  rs.add({lo_r("v1"), hi_l("f")}, {stat("f"), lo_r("v1")}, "enum.keep.f",
         p + ": collector parks a replayed bit");
  rs.add({lo_r("v0"), hi_l("v")}, {}, "enum.cancel",
         p + ": eater and closing bracket cancel");
  rs.add({lo_r("v0"), hi_l("f")}, {lo_r("v0")}, "enum.drop.f",
         p + ": eater swallows a replayed bit");
}

inline RuleSet enumsat_rules() {
  RuleSet rs;
  add_enumsat_rules(rs);
  return rs;
}

// ---- assembly of the full machines -----------------------------------------

inline RuleSet assemble_ruleset(Problem p) {
  RuleSet rs;
  add_fractal_rules(rs);
  add_until_rules(rs);
  add_decide_rules(rs);
  add_var_rules(rs);
  add_eval_rules(rs);
  add_store_rules(rs);

  std::vector<std::string> stations = {"start", "startoff", "x", "xoff"};
  if (p == Problem::qsat) {
    add_qsat_reduce_rules(rs);
    for (const char* q : {"existsL", "existsR", "forallL", "forallR"})
      stations.push_back(q);
  }

  // Generic beam carriers: full lens treatment.
  std::vector<std::string> carriers = {"and", "or", "not", "s"};
  if (p == Problem::qsat) carriers.push_back("c");
  if (p == Problem::enumsat) carriers.push_back("v");
  add_lens_rules(rs, carriers, stations);

  // Carriers that reflect at the evaluation stationary instead of splitting.
  std::vector<std::string> reflecting = {"gamma", "t", "f"};
  std::vector<std::string> nonstart(stations.begin() + 1, stations.end());
  add_lens_rules(rs, reflecting, nonstart);

  // Signals with bespoke split behavior still ride the accelerator.
  std::vector<std::string> accel_only = {"stop", "stopaux", "a", "x", "beta"};
  if (p == Problem::qsat) {
    accel_only.push_back("exists");
    accel_only.push_back("forall");
  }
  if (p == Problem::sharpsat) {
    for (const char* b : {"add", "zero", "one", "addlo", "addhi"})
      accel_only.push_back(b);
  }
  add_lens_rules(rs, accel_only, {});

  if (p == Problem::sharpsat) {
    add_sharpsat_rules(rs);
    add_lens_rules(rs, {"zero0", "addlo0", "addhi0"}, {"addL0", "addR0"});
  }
  if (p == Problem::enumsat) add_enumsat_rules(rs);

  return mirror_close(rs);
}

}  // namespace fractalsat
