#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fractalsat/errors.hpp"
#include "fractalsat/meta.hpp"
#include "fractalsat/rational.hpp"

namespace fractalsat {

// Straight-line motion from a birth point.  All coordinates are exact.
struct Trajectory {
  Rational birth_pos;
  Rational birth_time;
  int speed = 0;
};

inline Rational position_at(const Trajectory& s, const Rational& t) {
  if (t < s.birth_time) throw PreconditionError("position_at: time before birth");
  if (s.speed == 0) return s.birth_pos;
  return s.birth_pos + Rational(s.speed) * (t - s.birth_time);
}

struct Meeting {
  Rational time;
  Rational pos;
};

// The unique meeting point of two trajectories strictly after `after`,
// or nothing when the speeds are equal or the crossing lies in the past.
inline std::optional<Meeting> meet(const Trajectory& s1, const Trajectory& s2,
                                   const Rational& after) {
  if (s1.speed == s2.speed) return std::nullopt;
  // Solve x1 + v1 (t - t1) = x2 + v2 (t - t2).
  Rational v1(s1.speed), v2(s2.speed);
  Rational t = (s2.birth_pos - v2 * s2.birth_time - s1.birth_pos + v1 * s1.birth_time) /
               (v1 - v2);
  if (t <= after || t < s1.birth_time || t < s2.birth_time) return std::nullopt;
  return Meeting{t, position_at(s1, t)};
}

// An instantaneous machine state contribution: meta-signals placed at exact
// positions.  Entries are kept sorted by position; all metas at one position
// must have pairwise distinct speeds.
class Configuration {
public:
  struct Entry {
    Rational pos;
    std::vector<MetaId> metas;  // sorted by speed ascending
  };

  void place(const Rational& pos, MetaId meta, const MetaTable& table) {
    auto it = entries_.begin();
    while (it != entries_.end() && it->pos < pos) ++it;
    if (it == entries_.end() || it->pos != pos)
      it = entries_.insert(it, Entry{pos, {}});
    int v = table[meta].speed_int();
    auto& ms = it->metas;
    auto mit = ms.begin();
    while (mit != ms.end() && table[*mit].speed_int() < v) ++mit;
    if (mit != ms.end() && table[*mit].speed_int() == v)
      throw PreconditionError("configuration: same-speed metas at one position");
    ms.insert(mit, meta);
  }

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  std::size_t signal_count() const {
    std::size_t n = 0;
    for (const auto& e : entries_) n += e.metas.size();
    return n;
  }

private:
  std::vector<Entry> entries_;
};

}  // namespace fractalsat
