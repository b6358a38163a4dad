#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <queue>
#include <sstream>
#include <string>
#include <vector>

#include "fractalsat/kinematics.hpp"
#include "fractalsat/rational.hpp"
#include "fractalsat/rules.hpp"

namespace fractalsat {

using SignalId = std::int32_t;
using EventId = std::int32_t;

struct Signal {
  MetaId meta;
  Rational birth_pos;
  Rational birth_time;
  EventId birth_event = -1;  // -1: part of the initial configuration
  EventId death_event = -1;  // -1: still alive when the run ended
  int speed = 0;

  Trajectory traj() const { return Trajectory{birth_pos, birth_time, speed}; }
};

struct CollisionEvent {
  Rational time;
  Rational pos;
  std::vector<SignalId> incoming;  // sorted by speed ascending
  std::vector<SignalId> outgoing;  // sorted by speed ascending
  std::int32_t rule = -1;          // index into the rule set; -1 = blank
};

enum class Termination { quiescent, budget_exhausted, horizon_reached };

inline const char* termination_name(Termination t) {
  switch (t) {
    case Termination::quiescent: return "quiescent";
    case Termination::budget_exhausted: return "budget_exhausted";
    case Termination::horizon_reached: return "horizon_reached";
  }
  return "?";
}

// Full causal record of one run: every signal ever alive and every collision,
// blank ones included.  Immutable once run() returns.
struct Trace {
  std::shared_ptr<const RuleSet> rules;
  Configuration initial;
  std::vector<Signal> signals;
  std::vector<CollisionEvent> events;
  Termination terminated = Termination::quiescent;

  bool alive(SignalId s) const { return signals[s].death_event < 0; }
  const MetaSignal& meta_of(SignalId s) const { return rules->metas[signals[s].meta]; }

  void serialize(std::ostream& os) const {
    const MetaTable& mt = rules->metas;
    for (const auto& e : initial.entries()) {
      os << "INIT x=" << e.pos.str() << " metas=";
      for (std::size_t i = 0; i < e.metas.size(); ++i)
        os << (i ? "," : "") << mt[e.metas[i]].name();
      os << "\n";
    }
    for (const auto& ev : events) {
      os << "EVENT t=" << ev.time.str() << " x=" << ev.pos.str() << " in=";
      for (std::size_t i = 0; i < ev.incoming.size(); ++i)
        os << (i ? "," : "") << mt[signals[ev.incoming[i]].meta].name();
      os << " out=";
      for (std::size_t i = 0; i < ev.outgoing.size(); ++i)
        os << (i ? "," : "") << mt[signals[ev.outgoing[i]].meta].name();
      os << " rule=" << (ev.rule < 0 ? std::string("blank") : rules->rule(ev.rule).id);
      os << "\n";
    }
    os << "END terminated=" << termination_name(terminated)
       << " events=" << events.size() << "\n";
  }

  std::string serialize() const {
    std::ostringstream os;
    serialize(os);
    return os.str();
  }
};

struct RunOptions {
  long long budget = 10'000'000;
  Rational horizon = Rational(2);
};

namespace detail {

struct Candidate {
  Rational t;
  Rational x;
  SignalId a;
  SignalId b;
};

// Min-heap order on (t, x, a, b).
struct CandidateAfter {
  bool operator()(const Candidate& p, const Candidate& q) const {
    if (p.t != q.t) return q.t < p.t;
    if (p.x != q.x) return q.x < p.x;
    if (p.a != q.a) return q.a < p.a;
    return q.b < p.b;
  }
};

class Engine {
public:
  Engine(std::shared_ptr<const RuleSet> rules, const Configuration& init,
         const RunOptions& opt)
      : rules_(std::move(rules)), opt_(opt) {
    tr_.rules = rules_;
    tr_.initial = init;
    SignalId prev = -1;
    for (const auto& entry : init.entries()) {
      for (MetaId m : entry.metas) {
        SignalId id = new_signal(m, entry.pos, Rational(0), -1);
        link_after(prev, id);
        prev = id;
      }
    }
    for (SignalId s = head_; s >= 0 && next_[s] >= 0; s = next_[s])
      pair_candidate(s, next_[s]);
  }

  Trace run() {
    while (true) {
      std::optional<Candidate> c = pop_valid();
      if (!c) {
        tr_.terminated = Termination::quiescent;
        break;
      }
      if (c->t > opt_.horizon) {
        tr_.terminated = Termination::horizon_reached;
        break;
      }
      if (static_cast<long long>(tr_.events.size()) >= opt_.budget) {
        tr_.terminated = Termination::budget_exhausted;
        break;
      }
      fire(*c);
    }
    return std::move(tr_);
  }

private:
  SignalId new_signal(MetaId m, const Rational& pos, const Rational& t, EventId birth) {
    Signal s;
    s.meta = m;
    s.birth_pos = pos;
    s.birth_time = t;
    s.birth_event = birth;
    s.speed = rules_->metas[m].speed_int();
    tr_.signals.push_back(std::move(s));
    prev_.push_back(-1);
    next_.push_back(-1);
    return static_cast<SignalId>(tr_.signals.size() - 1);
  }

  void link_after(SignalId at, SignalId id) {
    if (at < 0) {
      next_[id] = head_;
      if (head_ >= 0) prev_[head_] = id;
      head_ = id;
    } else {
      next_[id] = next_[at];
      prev_[id] = at;
      if (next_[at] >= 0) prev_[next_[at]] = id;
      next_[at] = id;
    }
  }

  void unlink(SignalId id) {
    if (prev_[id] >= 0) next_[prev_[id]] = next_[id];
    else head_ = next_[id];
    if (next_[id] >= 0) prev_[next_[id]] = prev_[id];
    prev_[id] = next_[id] = -1;
  }

  void pair_candidate(SignalId a, SignalId b, const Rational* now = nullptr) {
    if (a < 0 || b < 0) return;
    const Signal& sa = tr_.signals[a];
    const Signal& sb = tr_.signals[b];
    const Rational* after =
        sa.birth_time < sb.birth_time ? &sb.birth_time : &sa.birth_time;
    if (now && *after < *now) after = now;
    auto m = meet(sa.traj(), sb.traj(), *after);
    if (m) queue_.push(Candidate{std::move(m->time), std::move(m->pos), a, b});
  }

  std::optional<Candidate> pop_valid() {
    while (!queue_.empty()) {
      Candidate c = queue_.top();
      if (tr_.alive(c.a) && tr_.alive(c.b)) return c;
      queue_.pop();
    }
    return std::nullopt;
  }

  void fire(const Candidate& c) {
    queue_.pop();
    // Gather the full coincidence group: the spatial order list is exact
    // between events, so the group is contiguous around c.a.
    SignalId first = c.a;
    while (prev_[first] >= 0 &&
           position_at(tr_.signals[prev_[first]].traj(), c.t) == c.x)
      first = prev_[first];
    SignalId last = c.a;
    while (next_[last] >= 0 &&
           position_at(tr_.signals[next_[last]].traj(), c.t) == c.x)
      last = next_[last];

    std::vector<SignalId> group;
    for (SignalId s = first;; s = next_[s]) {
      group.push_back(s);
      if (s == last) break;
    }
    assert(group.size() >= 2);

    std::vector<MetaId> inc_metas;
    inc_metas.reserve(group.size());
    for (SignalId s : group) inc_metas.push_back(tr_.signals[s].meta);
    auto match = rules_->match(inc_metas);

    std::vector<MetaId> out_metas =
        match ? rules_->rule(*match).rhs : inc_metas;  // blank regenerates

    EventId eid = static_cast<EventId>(tr_.events.size());
    CollisionEvent ev;
    ev.time = c.t;
    ev.pos = c.x;
    ev.rule = match ? static_cast<std::int32_t>(*match) : -1;
    ev.incoming = group;
    std::sort(ev.incoming.begin(), ev.incoming.end(), [&](SignalId p, SignalId q) {
      return tr_.signals[p].speed < tr_.signals[q].speed;
    });

    SignalId left = prev_[first];
    SignalId right = next_[last];
    for (SignalId s : group) {
      tr_.signals[s].death_event = eid;
      unlink(s);
    }

    std::sort(out_metas.begin(), out_metas.end(), [&](MetaId p, MetaId q) {
      return rules_->metas[p].speed_int() < rules_->metas[q].speed_int();
    });
    SignalId at = left;
    for (MetaId m : out_metas) {
      SignalId id = new_signal(m, c.x, c.t, eid);
      ev.outgoing.push_back(id);
      link_after(at, id);
      at = id;
    }
    // Fresh meeting candidates along the re-spliced chain.  Consecutive
    // outgoing signals are co-born and diverge, so those pairs are rejected
    // inside pair_candidate at no cost.
    std::vector<SignalId> chain;
    if (left >= 0) chain.push_back(left);
    for (SignalId s : ev.outgoing) chain.push_back(s);
    if (right >= 0) chain.push_back(right);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      pair_candidate(chain[i], chain[i + 1], &c.t);

    tr_.events.push_back(std::move(ev));
  }

  std::shared_ptr<const RuleSet> rules_;
  RunOptions opt_;
  Trace tr_;
  std::vector<SignalId> prev_, next_;
  SignalId head_ = -1;
  std::priority_queue<Candidate, std::vector<Candidate>, CandidateAfter> queue_;
};

}  // namespace detail

// Deterministic event-driven execution: repeatedly fire the earliest
// coincidence (ties broken by position) until quiescence, budget, or horizon.
inline Trace run(std::shared_ptr<const RuleSet> rules, const Configuration& init,
                 const RunOptions& opt = {}) {
  if (opt.budget < 1) throw PreconditionError("run: budget must be >= 1");
  return detail::Engine(std::move(rules), init, opt).run();
}

inline Trace run(const RuleSet& rules, const Configuration& init,
                 const RunOptions& opt = {}) {
  return run(std::make_shared<RuleSet>(rules), init, opt);
}

}  // namespace fractalsat
