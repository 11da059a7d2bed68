#include "spdom/ordinal.hpp"

#include <cassert>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "spdom/error.hpp"
#include "text_cursor.hpp"

namespace spdom {

Ordinal::Ordinal() = default;
Ordinal::Ordinal(const Ordinal&) = default;
Ordinal::Ordinal(Ordinal&&) noexcept = default;
Ordinal& Ordinal::operator=(const Ordinal&) = default;
Ordinal& Ordinal::operator=(Ordinal&&) noexcept = default;
Ordinal::~Ordinal() = default;

Ordinal::Ordinal(unsigned long n) : Ordinal(mpz_class(n)) {}

Ordinal::Ordinal(const mpz_class& n) {
  if (sgn(n) < 0) throw DomainError("ordinal: negative value");
  if (sgn(n) > 0) terms_.push_back(Term{Ordinal(), n});
}

Ordinal::Ordinal(Terms terms) : terms_(std::move(terms)) {
#ifndef NDEBUG
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    assert(sgn(terms_[i].coefficient) > 0);
    if (i + 1 < terms_.size())
      assert(compare(terms_[i].exponent, terms_[i + 1].exponent) == std::strong_ordering::greater);
  }
#endif
}

Ordinal Ordinal::omega() { return omega_pow(Ordinal(1ul)); }

Ordinal Ordinal::omega_pow(const Ordinal& exponent) {
  return Ordinal(Terms{Term{exponent, 1}});
}

bool Ordinal::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

mpz_class Ordinal::finite_value() const {
  if (!is_finite()) throw std::logic_error("finite_value on an infinite ordinal");
  return terms_.empty() ? mpz_class(0) : terms_[0].coefficient;
}

const Ordinal& Ordinal::leading_exponent() const {
  if (terms_.empty()) throw std::logic_error("leading_exponent of 0");
  return terms_.front().exponent;
}

const mpz_class& Ordinal::leading_coefficient() const {
  if (terms_.empty()) throw std::logic_error("leading_coefficient of 0");
  return terms_.front().coefficient;
}

const Ordinal& Ordinal::least_exponent() const {
  if (terms_.empty()) throw std::logic_error("least_exponent of 0");
  return terms_.back().exponent;
}

bool operator==(const Ordinal& a, const Ordinal& b) { return a.terms_ == b.terms_; }

std::strong_ordering compare(const Ordinal& a, const Ordinal& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (std::size_t i = 0; i < ta.size() && i < tb.size(); ++i) {
    auto c = compare(ta[i].exponent, tb[i].exponent);
    if (c != std::strong_ordering::equal) return c;
    int cc = cmp(ta[i].coefficient, tb[i].coefficient);
    if (cc != 0) return cc < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  // A proper prefix denotes a strictly smaller ordinal.
  if (ta.size() != tb.size())
    return ta.size() < tb.size() ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  const Ordinal& lead = b.leading_exponent();
  Ordinal::Terms out;
  for (const auto& t : a.terms()) {
    if (compare(t.exponent, lead) == std::strong_ordering::greater) out.push_back(t);
  }
  Ordinal::Terms tail = b.terms();
  for (const auto& t : a.terms()) {
    if (t.exponent == lead) {
      tail.front().coefficient += t.coefficient;
      break;
    }
  }
  out.insert(out.end(), tail.begin(), tail.end());
  return Ordinal(std::move(out));
}

Ordinal mul(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal();
  Ordinal acc;
  for (const auto& t : b.terms()) {
    Ordinal part;
    if (t.exponent.is_zero()) {
      // a * n for finite n: scale the leading coefficient, keep the tail.
      Ordinal::Terms ts = a.terms();
      ts.front().coefficient *= t.coefficient;
      part = Ordinal(std::move(ts));
    } else {
      part = Ordinal(Ordinal::Terms{
          Ordinal::Term{add(a.leading_exponent(), t.exponent), t.coefficient}});
    }
    acc = add(acc, part);
  }
  return acc;
}

Ordinal succ(const Ordinal& a) { return add(a, Ordinal(1ul)); }

namespace {

// Unique xi with alpha + xi = e; requires alpha <= e.
Ordinal left_subtract(const Ordinal& alpha, const Ordinal& e) {
  const auto& ta = alpha.terms();
  const auto& te = e.terms();
  std::size_t i = 0;
  while (i < ta.size() && i < te.size() && ta[i] == te[i]) ++i;
  if (i == ta.size()) return Ordinal(Ordinal::Terms(te.begin() + i, te.end()));
  assert(i < te.size());  // otherwise alpha > e
  auto c = compare(ta[i].exponent, te[i].exponent);
  if (c == std::strong_ordering::less)
    return Ordinal(Ordinal::Terms(te.begin() + i, te.end()));
  assert(c == std::strong_ordering::equal && cmp(ta[i].coefficient, te[i].coefficient) < 0);
  Ordinal::Terms out;
  out.push_back(Ordinal::Term{te[i].exponent,
                              mpz_class(te[i].coefficient - ta[i].coefficient)});
  out.insert(out.end(), te.begin() + i + 1, te.end());
  return Ordinal(std::move(out));
}

}  // namespace

OrdinalDivMod divmod(const Ordinal& lambda, const Ordinal& alpha) {
  Ordinal::Terms q, r;
  for (const auto& t : lambda.terms()) {
    if (compare(t.exponent, alpha) != std::strong_ordering::less) {
      q.push_back(Ordinal::Term{left_subtract(alpha, t.exponent), t.coefficient});
    } else {
      r.push_back(t);
    }
  }
  return OrdinalDivMod{Ordinal(std::move(q)), Ordinal(std::move(r))};
}

OrdinalClass classify(const Ordinal& a) {
  if (a.is_zero()) return {OrdinalKind::Zero, std::nullopt};
  if (!a.least_exponent().is_zero()) return {OrdinalKind::Limit, std::nullopt};
  Ordinal::Terms pred = a.terms();
  if (pred.back().coefficient == 1) {
    pred.pop_back();
  } else {
    pred.back().coefficient -= 1;
  }
  return {OrdinalKind::Successor, Ordinal(std::move(pred))};
}

bool is_successor_or_zero(const Ordinal& a) {
  return a.is_zero() || a.least_exponent().is_zero();
}

namespace {

mpz_class parse_coefficient(detail::Cursor& cur) {
  std::size_t at = cur.pos;
  mpz_class c = cur.nat("ordinal coefficient");
  if (sgn(c) == 0) throw ParseError("ordinal: coefficient 0 is not allowed", at);
  return c;
}

Ordinal parse_ordinal_expr(detail::Cursor& cur);

Ordinal parse_factor(detail::Cursor& cur) {
  if (cur.try_eat('(')) {
    Ordinal inner = parse_ordinal_expr(cur);
    cur.expect(')', "ordinal exponent");
    return inner;
  }
  if (cur.at_digit()) return Ordinal(cur.nat("ordinal exponent"));
  cur.fail("ordinal: expected a number or a parenthesized ordinal");
}

Ordinal parse_term(detail::Cursor& cur) {
  if (cur.at_digit()) return Ordinal(cur.nat("ordinal term"));
  if (cur.try_eat('w')) {
    Ordinal exponent = Ordinal(1ul);
    if (cur.try_eat('^')) exponent = parse_factor(cur);
    if (cur.try_eat('*')) {
      mpz_class coefficient = parse_coefficient(cur);
      return Ordinal(
          Ordinal::Terms{Ordinal::Term{std::move(exponent), std::move(coefficient)}});
    }
    return Ordinal::omega_pow(exponent);
  }
  cur.fail("ordinal: expected a term (number or 'w')");
}

Ordinal parse_ordinal_expr(detail::Cursor& cur) {
  Ordinal acc = parse_term(cur);
  while (cur.try_eat('+')) acc = add(acc, parse_term(cur));
  return acc;
}

}  // namespace

Ordinal parse_ordinal(std::string_view text) {
  detail::Cursor cur{text};
  Ordinal o = parse_ordinal_expr(cur);
  cur.expect_end("ordinal");
  return o;
}

std::string to_string(const Ordinal& o) {
  if (o.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : o.terms()) {
    if (!first) out += '+';
    first = false;
    if (t.exponent.is_zero()) {
      out += t.coefficient.get_str();
      continue;
    }
    out += 'w';
    if (!(t.exponent == Ordinal(1ul))) {
      out += '^';
      if (t.exponent.is_finite()) {
        out += to_string(t.exponent);
      } else {
        out += '(';
        out += to_string(t.exponent);
        out += ')';
      }
    }
    if (t.coefficient != 1) {
      out += '*';
      out += t.coefficient.get_str();
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Ordinal& o) { return os << to_string(o); }

}  // namespace spdom
