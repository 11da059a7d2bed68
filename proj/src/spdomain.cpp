#include "spdom/spdomain.hpp"

#include <utility>

#include "spdom/error.hpp"

namespace spdom {

Ideal::Ideal(StepFunction fn) : fn_(std::move(fn)) {
  if (sgn(fn_.min_value()) < 0)
    throw DomainError("ideal: the function must be nonnegative (integral ideal)");
}

Ideal Ideal::unit(const Space& space) { return Ideal(StepFunction::constant(space, 0)); }

Ideal Ideal::jacobson_radical(const Space& space) {
  return Ideal(StepFunction::constant(space, 1));
}

Ideal mul(const Ideal& a, const Ideal& b) { return Ideal(a.fn() + b.fn()); }

Ideal radical(const Ideal& a) { return Ideal(StepFunction::indicator(a.fn().support())); }

RadicalFactorization sp_factor(const Ideal& a) {
  if (a.is_unit()) throw DomainError("sp_factor: the unit ideal has no factorization");
  RadicalFactorization out;
  for (mpz_class k = 1; cmp(k, a.fn().max_value()) <= 0; ++k) {
    Clopen level = Clopen::empty(a.space());
    for (const auto& piece : a.fn().pieces())
      if (cmp(piece.value, k) >= 0) level = clop_union(level, piece.set);
    out.chain.push_back(std::move(level));
  }
  return out;
}

Ideal sp_product(const RadicalFactorization& f, const Space& space) {
  if (f.chain.empty()) throw DomainError("sp_product: empty chain");
  StepFunction fn = StepFunction::constant(space, 0);
  const Clopen* previous = nullptr;
  for (const Clopen& member : f.chain) {
    if (!(member.space() == space))
      throw DomainError("sp_product: chain member over a different space");
    if (member.is_empty()) throw DomainError("sp_product: empty chain member");
    if (previous && !clop_subset(member, *previous))
      throw DomainError("sp_product: chain is not descending");
    previous = &member;
    fn = fn + StepFunction::indicator(member);
  }
  return Ideal(std::move(fn));
}

bool is_sharp(const Space& s, const Point& m) { return is_isolated(s, m); }

std::optional<Ordinal> sharp_degree(const Space& s) {
  if (!is_scattered(s)) return std::nullopt;
  const Ordinal& lambda = *s.ordinal_part;
  return lambda.is_finite() ? Ordinal() : lambda.leading_exponent();
}

std::optional<Ordinal> dull_degree(const Space& s) {
  if (is_scattered(s)) return std::nullopt;
  return cb_rank(s).rank;
}

std::optional<Space> overring_spectrum(const Space& s, const Ordinal& alpha) {
  return derived_space(s, alpha);
}

std::vector<std::pair<Point, mpz_class>> max_power_decomposition(const Ideal& a) {
  auto size = finite_size(a.space());
  if (!size)
    throw UnsupportedError(
        "max_power_decomposition: infinite spectrum, the intersection of "
        "powers is not finitely representable");
  if (a.is_unit())
    throw DomainError("max_power_decomposition: the unit ideal is excluded");
  std::vector<std::pair<Point, mpz_class>> out;
  for (mpz_class k = 0; cmp(k, *size) < 0; ++k) {
    Point p{OrdPoint{Ordinal(k)}};
    mpz_class mult = a.fn().eval(p);
    if (sgn(mult) > 0) out.emplace_back(std::move(p), std::move(mult));
  }
  return out;
}

const char* to_string(DegreeKind k) { return k == DegreeKind::Sharp ? "sharp" : "dull"; }

DegreeReport degree_report(const Space& s) {
  RankReport rank = cb_rank(s);
  if (auto alpha = sharp_degree(s)) {
    return DegreeReport{DegreeKind::Sharp, std::move(*alpha), std::move(rank.rank),
                        FinalKind::Finite, rank.penultimate_count};
  }
  Ordinal degree = *dull_degree(s);
  return DegreeReport{DegreeKind::Dull, std::move(degree), std::move(rank.rank),
                      FinalKind::Perfect, std::nullopt};
}

}  // namespace spdom
