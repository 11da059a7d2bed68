#pragma once

// Deterministic random generators for the property suites. Everything takes
// an explicit engine so each test pins its own seed.

#include <random>
#include <string>
#include <vector>

#include "spdom/completion.hpp"
#include "spdom/lgroup.hpp"
#include "spdom/ordinal.hpp"
#include "spdom/space.hpp"

namespace spdom::testgen {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random ordinal strictly below w^bound_exp with small coefficients, built
// from a handful of strictly decreasing exponents.
inline Ordinal random_ordinal_below_pow(Rng& rng, const Ordinal& bound_exp, int depth = 2) {
  if (bound_exp.is_zero()) return Ordinal();
  Ordinal::Terms terms;
  Ordinal exp_cap = bound_exp;  // exponents must stay < exp_cap
  for (int i = 0; i < 3; ++i) {
    // Pick an exponent below exp_cap.
    Ordinal e;
    if (exp_cap.is_finite()) {
      mpz_class cap = exp_cap.finite_value();
      if (sgn(cap) == 0) break;
      unsigned long c = cap.get_ui();
      e = Ordinal(static_cast<unsigned long>(uniform(rng, 0, static_cast<int>(c) - 1)));
    } else {
      e = depth > 0 ? random_ordinal_below_pow(rng, exp_cap.leading_exponent(), depth - 1)
                    : Ordinal();
      if (!(compare(e, exp_cap) == std::strong_ordering::less)) e = Ordinal();
    }
    if (!terms.empty() && !(compare(e, terms.back().exponent) == std::strong_ordering::less))
      break;
    terms.push_back(Ordinal::Term{e, mpz_class(uniform(rng, 1, 3))});
    if (e.is_zero()) break;
    exp_cap = e;
    if (uniform(rng, 0, 2) == 0) break;
  }
  return Ordinal(std::move(terms));
}

// Random ordinal < mu (mu > 0).
inline Ordinal random_ordinal_below(Rng& rng, const Ordinal& mu) {
  if (mu.is_zero()) throw std::logic_error("random_ordinal_below(0)");
  const auto& terms = mu.terms();
  // Choose how many leading terms of mu to keep intact.
  int keep = uniform(rng, 0, static_cast<int>(terms.size()) - 1);
  Ordinal::Terms out(terms.begin(), terms.begin() + keep);
  const auto& t = terms[keep];
  // Shrink the coefficient of term `keep`; anything below w^e then fits.
  mpz_class c = t.coefficient - 1;
  if (sgn(c) > 0) {
    mpz_class pick = 1 + mpz_class(uniform(rng, 0, static_cast<int>(c.get_ui()) - 1));
    out.push_back(Ordinal::Term{t.exponent, pick});
  }
  Ordinal prefix(std::move(out));
  Ordinal below = t.exponent.is_zero() ? Ordinal() : random_ordinal_below_pow(rng, t.exponent);
  return prefix + below;
}

// Random ordinal <= mu.
inline Ordinal random_ordinal_leq(Rng& rng, const Ordinal& mu) {
  if (mu.is_zero() || uniform(rng, 0, 3) == 0) return mu;
  return random_ordinal_below(rng, mu);
}

// Random ordinal for generic arithmetic laws (not bounded by a space).
inline Ordinal random_ordinal(Rng& rng) {
  switch (uniform(rng, 0, 3)) {
    case 0: return Ordinal(static_cast<unsigned long>(uniform(rng, 0, 9)));
    case 1: return random_ordinal_below_pow(rng, Ordinal(3ul));
    case 2: return random_ordinal_below_pow(rng, Ordinal::omega());
    default: return random_ordinal_below_pow(rng, Ordinal::omega() + Ordinal(1ul), 1);
  }
}

// Pool of spaces exercising finite/infinite ordinal parts and the perfect
// component, alone and summed.
inline const std::vector<Space>& space_pool() {
  static const std::vector<Space> pool = [] {
    std::vector<Space> v;
    v.push_back(Space::ordinal_interval(Ordinal()));
    v.push_back(Space::ordinal_interval(Ordinal(5ul)));
    v.push_back(Space::ordinal_interval(parse_ordinal("w")));
    v.push_back(Space::ordinal_interval(parse_ordinal("w*2+3")));
    v.push_back(Space::ordinal_interval(parse_ordinal("w^2*3+w*2+5")));
    v.push_back(Space::ordinal_interval(parse_ordinal("w^3")));
    v.push_back(Space::cantor());
    v.push_back(Space::sum(parse_ordinal("w")));
    v.push_back(Space::sum(parse_ordinal("w^2*2+1")));
    return v;
  }();
  return pool;
}

inline const Space& random_space(Rng& rng) {
  const auto& pool = space_pool();
  return pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pool.size()) - 1))];
}

// Random zero-or-successor ordinal <= mu.
inline Ordinal random_clopen_endpoint(Rng& rng, const Ordinal& mu) {
  for (int attempt = 0; attempt < 4; ++attempt) {
    Ordinal a = random_ordinal_leq(rng, mu);
    if (!is_successor_or_zero(a)) a = succ(a);
    if (compare(a, mu) != std::strong_ordering::greater) return a;
  }
  return Ordinal();
}

inline std::string random_bits(Rng& rng, int max_len) {
  std::string s;
  int len = uniform(rng, 0, max_len);
  for (int i = 0; i < len; ++i) s += uniform(rng, 0, 1) ? '1' : '0';
  return s;
}

inline Clopen random_clopen(Rng& rng, const Space& space) {
  std::vector<Interval> ivs;
  std::vector<std::string> cyls;
  if (space.ordinal_part) {
    int n = uniform(rng, 0, 2);
    for (int i = 0; i < n; ++i) {
      Ordinal lo = random_clopen_endpoint(rng, *space.ordinal_part);
      Ordinal hi = random_ordinal_leq(rng, *space.ordinal_part);
      if (compare(hi, lo) == std::strong_ordering::less) hi = lo;
      ivs.push_back(Interval{std::move(lo), std::move(hi)});
    }
  }
  if (space.has_perfect_part) {
    int n = uniform(rng, 0, 2);
    for (int i = 0; i < n; ++i) cyls.push_back(random_bits(rng, 4));
  }
  return Clopen::make(space, std::move(ivs), std::move(cyls));
}

inline Point random_point(Rng& rng, const Space& space) {
  bool ordinal_side = space.ordinal_part && (!space.has_perfect_part || uniform(rng, 0, 1));
  if (ordinal_side) return Point{OrdPoint{random_ordinal_leq(rng, *space.ordinal_part)}};
  std::string period = random_bits(rng, 3);
  if (period.empty()) period = "0";
  return Point{PerfectPoint{random_bits(rng, 4), std::move(period)}};
}

inline EpSequence random_ep_sequence(Rng& rng, int max_abs = 6) {
  std::vector<mpz_class> prefix, period;
  int np = uniform(rng, 0, 4);
  for (int i = 0; i < np; ++i) prefix.push_back(mpz_class(uniform(rng, -max_abs, max_abs)));
  int nq = uniform(rng, 1, 4);
  for (int i = 0; i < nq; ++i) period.push_back(mpz_class(uniform(rng, -max_abs, max_abs)));
  return EpSequence::make(std::move(prefix), std::move(period));
}

inline StepFunction random_step_function(Rng& rng, const Space& space, int max_abs = 5) {
  std::vector<StepFunction::Piece> pieces;
  Clopen rest = Clopen::whole(space);
  int cuts = uniform(rng, 0, 3);
  for (int i = 0; i < cuts; ++i) {
    Clopen part = clop_intersect(random_clopen(rng, space), rest);
    if (part.is_empty()) continue;
    pieces.push_back(StepFunction::Piece{part, mpz_class(uniform(rng, -max_abs, max_abs))});
    rest = clop_minus(rest, part);
  }
  if (!rest.is_empty())
    pieces.push_back(StepFunction::Piece{rest, mpz_class(uniform(rng, -max_abs, max_abs))});
  return StepFunction::from_pieces(space, std::move(pieces));
}

}  // namespace spdom::testgen
