#include "spdom/space.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

#include "periodic.hpp"
#include "space_internal.hpp"
#include "spdom/error.hpp"
#include "text_cursor.hpp"

namespace spdom {

Space Space::ordinal_interval(Ordinal lambda) {
  return Space{std::move(lambda), false};
}

Space Space::cantor() { return Space{std::nullopt, true}; }

Space Space::sum(Ordinal lambda) { return Space{std::move(lambda), true}; }

bool Space::is_finite() const {
  return ordinal_part && ordinal_part->is_finite() && !has_perfect_part;
}

std::optional<mpz_class> finite_size(const Space& s) {
  if (!s.is_finite()) return std::nullopt;
  return mpz_class(s.ordinal_part->finite_value() + 1);
}

PerfectPoint::PerfectPoint(std::string prefix_bits, std::string period_bits)
    : prefix(std::move(prefix_bits)), period(std::move(period_bits)) {
  if (period.empty()) throw DomainError("perfect point: empty period");
  for (char c : prefix + period)
    if (c != '0' && c != '1') throw DomainError("perfect point: bits must be 0 or 1");
  detail::canonicalize_eventually_periodic(prefix, period);
}

char perfect_bit(const PerfectPoint& p, std::size_t k) {
  if (k < p.prefix.size()) return p.prefix[k];
  return p.period[(k - p.prefix.size()) % p.period.size()];
}

bool point_in_space(const Space& s, const Point& p) {
  if (const auto* op = std::get_if<OrdPoint>(&p))
    return s.ordinal_part &&
           compare(op->value, *s.ordinal_part) != std::strong_ordering::greater;
  return s.has_perfect_part;
}

namespace {

void require_point(const Space& s, const Point& p, const char* where) {
  if (!point_in_space(s, p))
    throw DomainError(std::string(where) + ": point does not lie in the space");
}

void require_same_space(const Space& a, const Space& b, const char* where) {
  if (!(a == b)) throw DomainError(std::string(where) + ": mismatched spaces");
}

bool leq(const Ordinal& a, const Ordinal& b) {
  return compare(a, b) != std::strong_ordering::greater;
}

bool lt(const Ordinal& a, const Ordinal& b) {
  return compare(a, b) == std::strong_ordering::less;
}

// Minimal antichain covering the same cylinder sets: prefixes absorb their
// extensions and complete sibling pairs merge into their parent, to fixpoint.
std::vector<std::string> canonicalize_cylinders(const std::vector<std::string>& raw) {
  if (raw.empty()) return {};
  for (const std::string& s : raw)
    if (s.empty()) return {""};
  std::vector<std::string> zero, one;
  for (const std::string& s : raw)
    (s[0] == '0' ? zero : one).push_back(s.substr(1));
  std::vector<std::string> c0 = canonicalize_cylinders(zero);
  std::vector<std::string> c1 = canonicalize_cylinders(one);
  if (c0.size() == 1 && c0[0].empty() && c1.size() == 1 && c1[0].empty()) return {""};
  std::vector<std::string> out;
  out.reserve(c0.size() + c1.size());
  for (const std::string& s : c0) out.push_back("0" + s);
  for (const std::string& s : c1) out.push_back("1" + s);
  return out;
}

// Complement of a canonical antichain within the whole component.
std::vector<std::string> complement_cylinders(const std::vector<std::string>& canon) {
  if (canon.empty()) return {""};
  if (canon.size() == 1 && canon[0].empty()) return {};
  std::vector<std::string> zero, one;
  for (const std::string& s : canon)
    (s[0] == '0' ? zero : one).push_back(s.substr(1));
  std::vector<std::string> out;
  for (const std::string& s : complement_cylinders(zero)) out.push_back("0" + s);
  for (const std::string& s : complement_cylinders(one)) out.push_back("1" + s);
  return canonicalize_cylinders(out);
}

}  // namespace

Clopen Clopen::make(Space space, std::vector<Interval> intervals,
                    std::vector<std::string> cylinders) {
  if (!space.ordinal_part && !space.has_perfect_part)
    throw DomainError("space: at least one component must be present");
  if (!intervals.empty() && !space.ordinal_part)
    throw DomainError("clopen: interval over a space without an ordinal part");
  if (!cylinders.empty() && !space.has_perfect_part)
    throw DomainError("clopen: cylinder over a space without a perfect part");
  for (const Interval& iv : intervals) {
    if (!is_successor_or_zero(iv.lo))
      throw DomainError("clopen: interval [" + to_string(iv.lo) + "," + to_string(iv.hi) +
                        "] has a limit lower endpoint, so it is not open");
    if (lt(iv.hi, iv.lo))
      throw DomainError("clopen: interval [" + to_string(iv.lo) + "," + to_string(iv.hi) +
                        "] is reversed");
    if (lt(*space.ordinal_part, iv.hi))
      throw DomainError("clopen: interval [" + to_string(iv.lo) + "," + to_string(iv.hi) +
                        "] reaches beyond the space");
  }
  for (const std::string& s : cylinders)
    for (char c : s)
      if (c != '0' && c != '1') throw DomainError("clopen: cylinder bits must be 0 or 1");

  std::sort(intervals.begin(), intervals.end(), [](const Interval& a, const Interval& b) {
    if (!(a.lo == b.lo)) return lt(a.lo, b.lo);
    return lt(a.hi, b.hi);
  });
  std::vector<Interval> merged;
  for (const Interval& iv : intervals) {
    if (!merged.empty() &&
        (leq(iv.lo, merged.back().hi) || iv.lo == succ(merged.back().hi))) {
      if (lt(merged.back().hi, iv.hi)) merged.back().hi = iv.hi;
    } else {
      merged.push_back(iv);
    }
  }

  Clopen out;
  out.space_ = std::move(space);
  out.intervals_ = std::move(merged);
  out.cylinders_ = canonicalize_cylinders(cylinders);
  return out;
}

Clopen Clopen::empty(Space space) { return make(std::move(space), {}, {}); }

Clopen Clopen::whole(Space space) {
  std::vector<Interval> ivs;
  if (space.ordinal_part) ivs.push_back(Interval{Ordinal(), *space.ordinal_part});
  std::vector<std::string> cyls;
  if (space.has_perfect_part) cyls.push_back("");
  return make(std::move(space), std::move(ivs), std::move(cyls));
}

Clopen Clopen::interval(Space space, Ordinal lo, Ordinal hi) {
  return make(std::move(space), {Interval{std::move(lo), std::move(hi)}}, {});
}

Clopen Clopen::cylinder(Space space, std::string bits) {
  return make(std::move(space), {}, {std::move(bits)});
}

bool Clopen::is_whole() const { return *this == whole(space_); }

Clopen clop_union(const Clopen& a, const Clopen& b) {
  require_same_space(a.space(), b.space(), "clopen union");
  std::vector<Interval> ivs = a.intervals();
  ivs.insert(ivs.end(), b.intervals().begin(), b.intervals().end());
  std::vector<std::string> cyls = a.cylinders();
  cyls.insert(cyls.end(), b.cylinders().begin(), b.cylinders().end());
  return Clopen::make(a.space(), std::move(ivs), std::move(cyls));
}

Clopen clop_intersect(const Clopen& a, const Clopen& b) {
  require_same_space(a.space(), b.space(), "clopen intersection");
  std::vector<Interval> ivs;
  for (const Interval& x : a.intervals()) {
    for (const Interval& y : b.intervals()) {
      const Ordinal& lo = lt(x.lo, y.lo) ? y.lo : x.lo;
      const Ordinal& hi = lt(x.hi, y.hi) ? x.hi : y.hi;
      if (leq(lo, hi)) ivs.push_back(Interval{lo, hi});
    }
  }
  std::vector<std::string> cyls;
  for (const std::string& x : a.cylinders()) {
    for (const std::string& y : b.cylinders()) {
      if (x.size() <= y.size() && y.compare(0, x.size(), x) == 0)
        cyls.push_back(y);
      else if (y.size() < x.size() && x.compare(0, y.size(), y) == 0)
        cyls.push_back(x);
    }
  }
  return Clopen::make(a.space(), std::move(ivs), std::move(cyls));
}

Clopen clop_complement(const Clopen& a) {
  const Space& s = a.space();
  std::vector<Interval> gaps;
  if (s.ordinal_part) {
    const Ordinal& lambda = *s.ordinal_part;
    Ordinal cursor;  // least point possibly uncovered so far
    bool exhausted = false;
    for (const Interval& iv : a.intervals()) {
      if (lt(cursor, iv.lo)) gaps.push_back(Interval{cursor, *classify(iv.lo).predecessor});
      if (iv.hi == lambda) {
        exhausted = true;
        break;
      }
      cursor = succ(iv.hi);
    }
    if (!exhausted && leq(cursor, lambda)) gaps.push_back(Interval{cursor, lambda});
  }
  std::vector<std::string> cyls;
  if (s.has_perfect_part) cyls = complement_cylinders(a.cylinders());
  return Clopen::make(s, std::move(gaps), std::move(cyls));
}

Clopen clop_minus(const Clopen& a, const Clopen& b) {
  return clop_intersect(a, clop_complement(b));
}

bool clop_subset(const Clopen& a, const Clopen& b) { return clop_minus(a, b).is_empty(); }

bool point_in_clopen(const Point& p, const Clopen& a) {
  require_point(a.space(), p, "point membership");
  if (const auto* op = std::get_if<OrdPoint>(&p)) {
    for (const Interval& iv : a.intervals())
      if (leq(iv.lo, op->value) && leq(op->value, iv.hi)) return true;
    return false;
  }
  const auto& pp = std::get<PerfectPoint>(p);
  for (const std::string& cyl : a.cylinders()) {
    bool match = true;
    for (std::size_t k = 0; k < cyl.size() && match; ++k)
      match = perfect_bit(pp, k) == cyl[k];
    if (match) return true;
  }
  return false;
}

std::optional<Point> sample_point(const Clopen& a) {
  if (!a.intervals().empty()) return Point{OrdPoint{a.intervals().front().lo}};
  if (!a.cylinders().empty()) return Point{PerfectPoint{a.cylinders().front(), "0"}};
  return std::nullopt;
}

bool is_isolated(const Space& s, const Point& p) {
  require_point(s, p, "is_isolated");
  if (const auto* op = std::get_if<OrdPoint>(&p)) return is_successor_or_zero(op->value);
  return false;  // a perfect set has no isolated points
}

bool cb_member(const Space& s, const Point& p, const Ordinal& alpha) {
  require_point(s, p, "cb_member");
  if (alpha.is_zero()) return true;
  if (std::holds_alternative<PerfectPoint>(p)) return true;
  const Ordinal& beta = std::get<OrdPoint>(p).value;
  if (beta.is_zero()) return false;
  // Survives iff beta = w^alpha * gamma with gamma >= 1, i.e. the least CNF
  // exponent of beta reaches alpha.
  return !lt(beta.least_exponent(), alpha);
}

std::optional<Space> derived_space(const Space& s, const Ordinal& alpha) {
  if (alpha.is_zero()) return s;  // X^0 = X
  std::optional<Ordinal> ord;
  if (s.ordinal_part) {
    auto [q, r] = divmod(*s.ordinal_part, alpha);
    if (q.is_zero()) {
      ord = std::nullopt;
    } else if (q.is_finite()) {
      ord = Ordinal(mpz_class(q.finite_value() - 1));  // q discrete points
    } else {
      ord = q;
    }
  }
  if (!ord && !s.has_perfect_part) return std::nullopt;
  return Space{std::move(ord), s.has_perfect_part};
}

const char* to_string(FinalKind k) {
  switch (k) {
    case FinalKind::Empty: return "empty";
    case FinalKind::Finite: return "finite";
    case FinalKind::Perfect: return "perfect";
  }
  return "?";
}

RankReport cb_rank(const Space& s) {
  if (!s.ordinal_part) return {Ordinal(), FinalKind::Perfect, std::nullopt};
  FinalKind fin = s.has_perfect_part ? FinalKind::Perfect : FinalKind::Empty;
  const Ordinal& lambda = *s.ordinal_part;
  if (lambda.is_finite())
    return {Ordinal(1ul), fin, mpz_class(lambda.finite_value() + 1)};
  return {succ(lambda.leading_exponent()), fin, lambda.leading_coefficient()};
}

bool is_scattered(const Space& s) { return !s.has_perfect_part; }

EdReport is_extremally_disconnected(const Space& s) {
  if (s.is_finite()) return {true, std::nullopt};
  EdWitness w;
  if (s.ordinal_part && !s.ordinal_part->is_finite()) {
    // U = even integers; its closure adds w, and every neighborhood of w
    // still meets the odd integers outside the closure.
    w.description =
        "closure of the even integers is the evens plus w, regular closed "
        "but not open: every neighborhood of w meets the odds";
    w.limit_point = Point{OrdPoint{Ordinal::omega()}};
    for (unsigned long k = 0; k < 5; ++k) {
      w.approaching.push_back(Clopen::interval(s, Ordinal(2 * k), Ordinal(2 * k)));
      w.avoiding.push_back(Clopen::interval(s, Ordinal(2 * k + 1), Ordinal(2 * k + 1)));
    }
  } else {
    // U = cylinders 0^{2k}1; its closure adds the all-zeros point, and the
    // cylinders 0^{2k+1}1 outside the closure accumulate there as well.
    w.description =
        "closure of the cylinders 0^{2k}1 adds the all-zeros point, regular "
        "closed but not open: every neighborhood of it meets the cylinders "
        "0^{2k+1}1";
    w.limit_point = Point{PerfectPoint{"", "0"}};
    std::string zeros;
    for (int k = 0; k < 5; ++k) {
      w.approaching.push_back(Clopen::cylinder(s, zeros + "1"));
      w.avoiding.push_back(Clopen::cylinder(s, zeros + "01"));
      zeros += "00";
    }
  }
  return {false, std::move(w)};
}

namespace {

std::string parse_bits(detail::Cursor& cur) {
  cur.skip_ws();
  std::string bits;
  while (cur.pos < cur.text.size() &&
         (cur.text[cur.pos] == '0' || cur.text[cur.pos] == '1'))
    bits += cur.text[cur.pos++];
  return bits;
}

// Parse an ordinal up to an unnested stop character, rethrowing with the
// position shifted into the enclosing literal.
Ordinal parse_ordinal_until(detail::Cursor& cur, char stop) {
  cur.skip_ws();
  std::size_t start = cur.pos;
  int depth = 0;
  while (cur.pos < cur.text.size()) {
    char c = cur.text[cur.pos];
    if (c == '(') ++depth;
    if (c == ')') {
      if (depth == 0) break;
      --depth;
    }
    if (depth == 0 && c == stop) break;
    ++cur.pos;
  }
  try {
    return parse_ordinal(cur.text.substr(start, cur.pos - start));
  } catch (const ParseError& e) {
    throw ParseError(std::string(e.what()), start + e.position());
  }
}

}  // namespace

Space parse_space(std::string_view text) {
  detail::Cursor cur{text};
  Space s;
  if (cur.try_eat("sum(ord(")) {
    Ordinal lambda = parse_ordinal_until(cur, ',');
    cur.expect(')', "space");
    cur.expect(',', "space");
    cur.expect("cantor", "space");
    cur.expect(')', "space");
    s = Space::sum(std::move(lambda));
  } else if (cur.try_eat("ord(")) {
    Ordinal lambda = parse_ordinal_until(cur, ',');
    cur.expect(')', "space");
    s = Space::ordinal_interval(std::move(lambda));
  } else if (cur.try_eat("cantor")) {
    s = Space::cantor();
  } else {
    cur.fail("space: expected ord(...), cantor, or sum(ord(...),cantor)");
  }
  cur.expect_end("space");
  return s;
}

namespace detail {

Clopen parse_clopen_items(Cursor& cur, const Space& space) {
  std::vector<Interval> ivs;
  std::vector<std::string> cyls;
  do {
    if (cur.try_eat('[')) {
      Ordinal lo = parse_ordinal_until(cur, ',');
      cur.expect(',', "interval");
      Ordinal hi = parse_ordinal_until(cur, ']');
      cur.expect(']', "interval");
      ivs.push_back(Interval{std::move(lo), std::move(hi)});
    } else if (cur.try_eat("cyl(")) {
      std::string bits = parse_bits(cur);
      cur.expect(')', "cylinder");
      cyls.push_back(std::move(bits));
    } else {
      cur.fail("clopen: expected [lo,hi] or cyl(bits)");
    }
  } while (cur.try_eat(';'));
  return Clopen::make(space, std::move(ivs), std::move(cyls));
}

}  // namespace detail

Clopen parse_clopen(std::string_view text, const Space& space) {
  detail::Cursor cur{text};
  if (cur.done()) return Clopen::empty(space);
  Clopen out = detail::parse_clopen_items(cur, space);
  cur.expect_end("clopen");
  return out;
}

Point parse_point(std::string_view text, const Space& space) {
  detail::Cursor cur{text};
  Point p;
  if (cur.try_eat("pt(")) {
    std::string prefix = parse_bits(cur);
    cur.expect(',', "point");
    std::string period = parse_bits(cur);
    cur.expect(')', "point");
    if (period.empty()) cur.fail("point: period must be nonempty");
    cur.expect_end("point");
    p = Point{PerfectPoint{std::move(prefix), std::move(period)}};
  } else {
    p = Point{OrdPoint{parse_ordinal(text)}};
  }
  if (!point_in_space(space, p))
    throw DomainError("point " + to_string(p) + " does not lie in " + to_string(space));
  return p;
}

std::string to_string(const Space& s) {
  if (s.ordinal_part && s.has_perfect_part)
    return "sum(ord(" + to_string(*s.ordinal_part) + "),cantor)";
  if (s.ordinal_part) return "ord(" + to_string(*s.ordinal_part) + ")";
  return "cantor";
}

std::string to_string(const Clopen& a) {
  std::string out;
  bool first = true;
  for (const Interval& iv : a.intervals()) {
    if (!first) out += ';';
    first = false;
    out += '[' + to_string(iv.lo) + ',' + to_string(iv.hi) + ']';
  }
  for (const std::string& c : a.cylinders()) {
    if (!first) out += ';';
    first = false;
    out += "cyl(" + c + ")";
  }
  return out;
}

std::string to_string(const Point& p) {
  if (const auto* op = std::get_if<OrdPoint>(&p)) return to_string(op->value);
  const auto& pp = std::get<PerfectPoint>(p);
  return "pt(" + pp.prefix + "," + pp.period + ")";
}

std::ostream& operator<<(std::ostream& os, const Space& s) { return os << to_string(s); }
std::ostream& operator<<(std::ostream& os, const Clopen& a) { return os << to_string(a); }
std::ostream& operator<<(std::ostream& os, const Point& p) { return os << to_string(p); }

}  // namespace spdom
