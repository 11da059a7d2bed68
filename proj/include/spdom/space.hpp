#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "spdom/ordinal.hpp"

namespace spdom {

/// Compact Boolean space: the ordinal interval [0, lambda] with the order
/// topology, a Cantor component, or their disjoint sum. At least one
/// component is present.
struct Space {
  std::optional<Ordinal> ordinal_part;  // lambda: the space of all ordinals <= lambda
  bool has_perfect_part = false;

  static Space ordinal_interval(Ordinal lambda);
  static Space cantor();
  static Space sum(Ordinal lambda);

  bool is_finite() const;  // finite discrete space

  friend bool operator==(const Space& a, const Space& b) {
    return a.ordinal_part == b.ordinal_part && a.has_perfect_part == b.has_perfect_part;
  }
};

// Number of points of a finite space.
std::optional<mpz_class> finite_size(const Space& s);

struct OrdPoint {
  Ordinal value;
  friend bool operator==(const OrdPoint& a, const OrdPoint& b) { return a.value == b.value; }
};

/// Point of the Cantor component: an eventually periodic bit sequence,
/// prefix then cyclic period. Self-canonicalizing, so equality is structural.
struct PerfectPoint {
  std::string prefix;  // '0'/'1'
  std::string period;  // nonempty

  PerfectPoint(std::string prefix, std::string period);
  friend bool operator==(const PerfectPoint& a, const PerfectPoint& b) {
    return a.prefix == b.prefix && a.period == b.period;
  }
};

using Point = std::variant<OrdPoint, PerfectPoint>;

char perfect_bit(const PerfectPoint& p, std::size_t k);
bool point_in_space(const Space& s, const Point& p);

struct Interval {
  Ordinal lo;  // 0 or a successor ordinal, else [lo, hi] is not open
  Ordinal hi;
  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

/// Canonical clopen subset of a Space: pairwise disjoint maximal intervals
/// sorted by lower endpoint, plus a minimal prefix-free antichain of binary
/// cylinders in lexicographic order. Canonical form is unique, so equality
/// is structural.
class Clopen {
 public:
  // Normalizes and validates; the one entry point for raw data.
  static Clopen make(Space space, std::vector<Interval> intervals,
                     std::vector<std::string> cylinders);
  static Clopen empty(Space space);
  static Clopen whole(Space space);
  static Clopen interval(Space space, Ordinal lo, Ordinal hi);
  static Clopen cylinder(Space space, std::string bits);

  const Space& space() const { return space_; }
  const std::vector<Interval>& intervals() const { return intervals_; }
  const std::vector<std::string>& cylinders() const { return cylinders_; }
  bool is_empty() const { return intervals_.empty() && cylinders_.empty(); }
  bool is_whole() const;

  friend bool operator==(const Clopen& a, const Clopen& b) {
    return a.space_ == b.space_ && a.intervals_ == b.intervals_ &&
           a.cylinders_ == b.cylinders_;
  }

 private:
  Clopen() = default;
  Space space_;
  std::vector<Interval> intervals_;
  std::vector<std::string> cylinders_;
};

Clopen clop_union(const Clopen& a, const Clopen& b);
Clopen clop_intersect(const Clopen& a, const Clopen& b);
Clopen clop_minus(const Clopen& a, const Clopen& b);
Clopen clop_complement(const Clopen& a);
bool clop_subset(const Clopen& a, const Clopen& b);
bool point_in_clopen(const Point& p, const Clopen& a);
// Some point of a nonempty clopen.
std::optional<Point> sample_point(const Clopen& a);

// {p} open: 0 or a successor ordinal; never in the perfect component.
bool is_isolated(const Space& s, const Point& p);

// p in X^alpha (Cantor-Bendixson derivative). Closed form: a perfect point
// always survives; an ordinal point beta survives iff alpha = 0 or beta is a
// nonzero multiple of w^alpha.
bool cb_member(const Space& s, const Point& p, const Ordinal& alpha);

// Space homeomorphic to X^alpha, or nullopt when X^alpha is empty.
std::optional<Space> derived_space(const Space& s, const Ordinal& alpha);

enum class FinalKind { Empty, Finite, Perfect };
const char* to_string(FinalKind k);

struct RankReport {
  Ordinal rank;         // least alpha with X^alpha = X^{alpha+1}
  FinalKind final_kind; // what the derivatives stabilize to (Empty or Perfect)
  // Size of the ordinal component of X^{rank-1}, when rank is a successor.
  std::optional<mpz_class> penultimate_count;
};

RankReport cb_rank(const Space& s);
bool is_scattered(const Space& s);

/// Certificate that a space is not extremally disconnected: an open set U
/// (given by a few of its clopen pieces) whose closure picks up limit_point;
/// the avoiding clopens lie outside the closure and accumulate at the same
/// point, so the closure is regular closed but not open.
struct EdWitness {
  std::string description;
  Point limit_point;
  std::vector<Clopen> approaching;
  std::vector<Clopen> avoiding;
};

struct EdReport {
  bool extremally_disconnected;
  std::optional<EdWitness> witness;
};

// True exactly for finite spaces in this model.
EdReport is_extremally_disconnected(const Space& s);

// Grammar: space := "ord(" ordinal ")" | "cantor" | "sum(ord(" ordinal "),cantor)"
Space parse_space(std::string_view text);
// Grammar: semicolon-separated "[" ordinal "," ordinal "]" and "cyl(" bits ")"
// items; the empty string denotes the empty set.
Clopen parse_clopen(std::string_view text, const Space& space);
// Grammar: ordinal | "pt(" bits "," bits ")" (prefix, period)
Point parse_point(std::string_view text, const Space& space);

std::string to_string(const Space& s);
std::string to_string(const Clopen& a);
std::string to_string(const Point& p);
std::ostream& operator<<(std::ostream& os, const Space& s);
std::ostream& operator<<(std::ostream& os, const Clopen& a);
std::ostream& operator<<(std::ostream& os, const Point& p);

}  // namespace spdom
