#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fractalsat/errors.hpp"
#include "fractalsat/rational.hpp"

namespace fractalsat {

enum class Dir : std::uint8_t { left, right, stationary };
enum class Tier : std::uint8_t { lo, hi, none };

// A meta-signal is the "type" of a signal: a base name plus direction and
// speed tier.  All machines here use the two-tier speed scheme
// {0, +-1, +-3}; decorated variants keep the tier of their base signal.
struct MetaSignal {
  std::string base;
  Dir dir = Dir::stationary;
  Tier tier = Tier::none;

  int speed_int() const {
    if (dir == Dir::stationary) return 0;
    int mag = tier == Tier::hi ? 3 : 1;
    return dir == Dir::right ? mag : -mag;
  }
  Rational speed() const { return Rational(speed_int()); }

  // Unique display name: "x" stationary, "->x" lo right, "=>x" hi right,
  // "<-x" lo left, "<=x" hi left.
  std::string name() const {
    switch (dir) {
      case Dir::stationary:
        return base;
      case Dir::right:
        return (tier == Tier::hi ? "=>" : "->") + base;
      case Dir::left:
        return (tier == Tier::hi ? "<=" : "<-") + base;
    }
    return base;
  }

  bool operator==(const MetaSignal& o) const = default;
};

inline MetaSignal stat(std::string base) {
  return MetaSignal{std::move(base), Dir::stationary, Tier::none};
}
inline MetaSignal lo_r(std::string base) {
  return MetaSignal{std::move(base), Dir::right, Tier::lo};
}
inline MetaSignal lo_l(std::string base) {
  return MetaSignal{std::move(base), Dir::left, Tier::lo};
}
inline MetaSignal hi_r(std::string base) {
  return MetaSignal{std::move(base), Dir::right, Tier::hi};
}
inline MetaSignal hi_l(std::string base) {
  return MetaSignal{std::move(base), Dir::left, Tier::hi};
}

using MetaId = std::int32_t;

// Interning table; ids are stable insertion indices, names unique.
class MetaTable {
public:
  MetaId intern(const MetaSignal& m) {
    auto it = by_name_.find(m.name());
    if (it != by_name_.end()) return it->second;
    MetaId id = static_cast<MetaId>(metas_.size());
    metas_.push_back(m);
    by_name_.emplace(m.name(), id);
    return id;
  }

  MetaId find(std::string_view name) const {
    auto it = by_name_.find(std::string(name));
    if (it == by_name_.end())
      throw PreconditionError("unknown meta-signal '" + std::string(name) + "'");
    return it->second;
  }

  bool contains(std::string_view name) const {
    return by_name_.count(std::string(name)) != 0;
  }

  const MetaSignal& operator[](MetaId id) const { return metas_.at(id); }
  std::size_t size() const { return metas_.size(); }

private:
  std::vector<MetaSignal> metas_;
  std::map<std::string, MetaId> by_name_;
};

}  // namespace fractalsat
