#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "fractalsat/engine.hpp"

namespace fractalsat {

namespace detail {

inline void require_quiescent(const Trace& tr, const char* who) {
  if (tr.terminated != Termination::quiescent)
    throw MalformedRun(std::string(who) + ": run ended " +
                       termination_name(tr.terminated) + ", not quiescent");
}

}  // namespace detail

// The verdict is the single surviving truth carrier, whatever its direction.
inline bool decode_verdict(const Trace& tr) {
  detail::require_quiescent(tr, "decode_verdict");
  std::optional<bool> verdict;
  for (SignalId s = 0; s < static_cast<SignalId>(tr.signals.size()); ++s) {
    if (!tr.alive(s)) continue;
    const std::string& base = tr.meta_of(s).base;
    if (base != "t" && base != "f") continue;
    if (verdict) throw MalformedRun("decode_verdict: multiple surviving truth signals");
    verdict = (base == "t");
  }
  if (!verdict) throw MalformedRun("decode_verdict: no surviving truth signal");
  return *verdict;
}

// The surviving digit train, read front to back (least significant digit
// first), must be digits then the lo marker then the hi marker.
inline unsigned long long decode_count(const Trace& tr) {
  detail::require_quiescent(tr, "decode_count");
  struct Item {
    Rational pos;
    char kind;  // 'd' digit, 'l' lo marker, 'h' hi marker
    int bit;
    int dir;
  };
  std::vector<Item> items;
  Rational t_ref(0);
  if (!tr.events.empty()) t_ref = tr.events.back().time;
  for (SignalId s = 0; s < static_cast<SignalId>(tr.signals.size()); ++s) {
    if (!tr.alive(s)) continue;
    const MetaSignal& m = tr.meta_of(s);
    char kind;
    int bit = 0;
    if (m.base == "zero") kind = 'd';
    else if (m.base == "one") { kind = 'd'; bit = 1; }
    else if (m.base == "addlo") kind = 'l';
    else if (m.base == "addhi") kind = 'h';
    else continue;
    items.push_back({position_at(tr.signals[s].traj(), t_ref), kind, bit,
                     tr.signals[s].speed});
  }
  if (items.empty()) throw MalformedRun("decode_count: no digit train survived");
  // The train moves as one block; front-first order is positional.
  bool leftward = items.front().dir < 0;
  std::sort(items.begin(), items.end(), [&](const Item& a, const Item& b) {
    return leftward ? a.pos < b.pos : b.pos < a.pos;
  });
  std::string shape;
  for (const auto& it : items) shape += it.kind;
  std::size_t digits = shape.find_first_not_of('d');
  if (digits == std::string::npos || shape.substr(digits) != "lh")
    throw MalformedRun("decode_count: stray signals between the stream markers");
  unsigned long long value = 0;
  for (std::size_t i = 0; i < digits; ++i)
    if (items[i].bit) value |= 1ull << i;
  return value;
}

// Each surviving stationary beam  v b1..bn v  encodes one satisfying
// assignment; bits were parked innermost variable first.
inline std::vector<std::vector<bool>> decode_assignments(const Trace& tr, int n) {
  detail::require_quiescent(tr, "decode_assignments");
  struct Bit {
    Rational pos;
    Rational born;
    char base;  // 'v', 't', 'f'
  };
  std::vector<Bit> stats;
  for (SignalId s = 0; s < static_cast<SignalId>(tr.signals.size()); ++s) {
    if (!tr.alive(s)) continue;
    const MetaSignal& m = tr.meta_of(s);
    if (m.dir != Dir::stationary) continue;
    if (m.base != "v" && m.base != "t" && m.base != "f") continue;
    stats.push_back({tr.signals[s].birth_pos, tr.signals[s].birth_time, m.base[0]});
  }
  std::sort(stats.begin(), stats.end(),
            [](const Bit& a, const Bit& b) { return a.pos < b.pos; });
  std::vector<std::vector<bool>> out;
  std::size_t i = 0;
  while (i < stats.size()) {
    if (stats[i].base != 'v')
      throw MalformedRun("decode_assignments: loose bit outside any beam");
    std::vector<Bit> bits;
    std::size_t j = i + 1;
    while (j < stats.size() && stats[j].base != 'v') bits.push_back(stats[j]), ++j;
    if (j == stats.size())
      throw MalformedRun("decode_assignments: unterminated beam");
    if (static_cast<int>(bits.size()) != n)
      throw MalformedRun("decode_assignments: beam with wrong bit count");
    // Parked in birth order x_n .. x_1.
    std::sort(bits.begin(), bits.end(),
              [](const Bit& a, const Bit& b) { return a.born < b.born; });
    std::vector<bool> assignment(n);
    for (int k = 0; k < n; ++k) assignment[n - 1 - k] = bits[k].base == 't';
    out.push_back(std::move(assignment));
    i = j + 1;
  }
  return out;
}

inline std::optional<std::vector<bool>> first_solution(const Trace& tr, int n) {
  auto all = decode_assignments(tr, n);
  if (all.empty()) return std::nullopt;
  return all.front();  // beams come out sorted by position
}

}  // namespace fractalsat
