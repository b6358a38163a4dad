#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fractalsat/errors.hpp"
#include "fractalsat/meta.hpp"

namespace fractalsat {

// One rewrite: a set of co-located meta-signals (pairwise distinct speeds)
// replaced by another such set.  An empty rhs annihilates.
struct CollisionRule {
  std::vector<MetaId> lhs;  // sorted by id
  std::vector<MetaId> rhs;
  std::string id;
  std::string provenance;
};

class RuleSet {
public:
  MetaTable metas;

  MetaId intern(const MetaSignal& m) { return metas.intern(m); }

  void add(std::vector<MetaSignal> lhs, std::vector<MetaSignal> rhs,
           const std::string& id, const std::string& provenance) {
    CollisionRule r;
    for (const auto& m : lhs) r.lhs.push_back(metas.intern(m));
    for (const auto& m : rhs) r.rhs.push_back(metas.intern(m));
    r.id = id;
    r.provenance = provenance;
    add(std::move(r));
  }

  void add(CollisionRule r) {
    std::sort(r.lhs.begin(), r.lhs.end());
    auto it = by_lhs_.find(r.lhs);
    if (it != by_lhs_.end()) {
      const CollisionRule& prev = rules_[it->second];
      if (sorted(prev.rhs) == sorted(r.rhs)) return;  // harmless duplicate
      throw RuleSetError("rules '" + prev.id + "' and '" + r.id +
                         "' share a left-hand side with different outcomes");
    }
    by_lhs_.emplace(r.lhs, rules_.size());
    rules_.push_back(std::move(r));
  }

  // Exact-set match; nullopt means the collision is blank.
  std::optional<std::size_t> match(std::vector<MetaId> incoming) const {
    std::sort(incoming.begin(), incoming.end());
    auto it = by_lhs_.find(incoming);
    if (it == by_lhs_.end()) return std::nullopt;
    return it->second;
  }

  const std::vector<CollisionRule>& rules() const { return rules_; }
  const CollisionRule& rule(std::size_t i) const { return rules_.at(i); }

  // Human-readable catalog, one rule per line: "lhs -> rhs   # id: provenance".
  std::string catalog() const {
    std::ostringstream os;
    for (const auto& r : rules_) {
      std::string line;
      for (std::size_t i = 0; i < r.lhs.size(); ++i)
        line += (i ? ", " : "") + metas[r.lhs[i]].name();
      line += " -> ";
      for (std::size_t i = 0; i < r.rhs.size(); ++i)
        line += (i ? ", " : "") + metas[r.rhs[i]].name();
      if (line.size() < 56) line.resize(56, ' ');
      os << line << " # " << r.id << ": " << r.provenance << "\n";
    }
    return os.str();
  }

private:
  static std::vector<MetaId> sorted(std::vector<MetaId> v) {
    std::sort(v.begin(), v.end());
    return v;
  }

  std::vector<CollisionRule> rules_;
  std::map<std::vector<MetaId>, std::size_t> by_lhs_;
};

struct Violation {
  std::string rule_id;
  std::string what;
};

// Well-formedness: every rule needs >= 2 inputs, pairwise distinct speeds on
// both sides, and no two rules may share a left-hand side (enforced
// structurally by RuleSet::add, revalidated here for reports).
inline std::vector<Violation> validate(const RuleSet& rs) {
  std::vector<Violation> out;
  auto distinct_speeds = [&](const std::vector<MetaId>& ids) {
    std::vector<int> v;
    for (MetaId id : ids) v.push_back(rs.metas[id].speed_int());
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
  };
  std::map<std::vector<MetaId>, std::string> seen;
  for (const auto& r : rs.rules()) {
    if (r.lhs.size() < 2) out.push_back({r.id, "fewer than two incoming signals"});
    if (!distinct_speeds(r.lhs)) out.push_back({r.id, "same-speed signals on the left"});
    if (!distinct_speeds(r.rhs)) out.push_back({r.id, "same-speed signals on the right"});
    auto key = r.lhs;
    std::sort(key.begin(), key.end());
    auto [it, fresh] = seen.emplace(key, r.id);
    if (!fresh) out.push_back({r.id, "left-hand side duplicates rule " + it->second});
  }
  return out;
}

namespace detail {

// Stationary decorations that name the side a result is sent to.
inline std::string mirror_base(const std::string& base) {
  static const std::map<std::string, std::string> swaps = {
      {"existsL", "existsR"}, {"existsR", "existsL"},
      {"forallL", "forallR"}, {"forallR", "forallL"},
      {"addL0", "addR0"},     {"addR0", "addL0"},
      {"addL1", "addR1"},     {"addR1", "addL1"},
  };
  auto it = swaps.find(base);
  return it == swaps.end() ? base : it->second;
}

inline MetaSignal mirror(const MetaSignal& m) {
  MetaSignal r = m;
  r.base = mirror_base(m.base);
  if (m.dir == Dir::left)
    r.dir = Dir::right;
  else if (m.dir == Dir::right)
    r.dir = Dir::left;
  return r;
}

}  // namespace detail

// Adds, for every rule, its left/right mirror image.  Idempotent; a mirror
// that contradicts an existing distinct rule is an error.
inline RuleSet mirror_close(const RuleSet& in) {
  RuleSet out = in;
  for (const auto& r : in.rules()) {
    std::vector<MetaSignal> lhs, rhs;
    for (MetaId id : r.lhs) lhs.push_back(detail::mirror(in.metas[id]));
    for (MetaId id : r.rhs) rhs.push_back(detail::mirror(in.metas[id]));
    out.add(std::move(lhs), std::move(rhs), r.id + ".m", "mirror of " + r.id);
  }
  return out;
}

// The lens meta-rule.  Every listed lo-tier right mover gets the
// acceleration rule {->s, <=start} -> {<=start, =>s}; for each listed
// stationary it also gets the decelerate-and-split rule
// {=>s, S} -> {<-s, S, ->s}.  Signals with bespoke split behavior must not
// be passed here with stationaries (pass an empty stationary list to emit
// their acceleration rules only).
inline void add_lens_rules(RuleSet& rs, const std::vector<std::string>& passthrough,
                           const std::vector<std::string>& stationaries) {
  for (const auto& base : passthrough) {
    if (base == "start" || base == "startoff")
      throw PreconditionError("lens: '" + base + "' has bespoke collision behavior");
    rs.add({lo_r(base), hi_l("start")}, {hi_l("start"), hi_r(base)},
           "lens.accel." + base, "lens device: acceleration of " + base);
    for (const auto& st : stationaries) {
      rs.add({hi_r(base), stat(st)}, {lo_l(base), stat(st), lo_r(base)},
             "lens.split." + base + "." + st,
             "lens device: decelerate-and-split of " + base + " at " + st);
    }
  }
}

}  // namespace fractalsat
