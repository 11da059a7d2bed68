#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "spdom/lgroup.hpp"

namespace spdom {

/// Integral invertible ideal in the function model: a step function fn >= 0
/// under the dictionary  multiplication = pointwise sum, ideal sum = min,
/// intersection = max, containment reversed, radical = indicator of support.
/// fn = 0 is the unit ideal R; the Jacobson radical is the constant 1.
class Ideal {
 public:
  explicit Ideal(StepFunction fn);
  static Ideal unit(const Space& space);
  static Ideal jacobson_radical(const Space& space);

  const StepFunction& fn() const { return fn_; }
  const Space& space() const { return fn_.space(); }
  bool is_unit() const { return fn_.is_zero(); }

  friend bool operator==(const Ideal& a, const Ideal& b) { return a.fn_ == b.fn_; }

 private:
  StepFunction fn_;
};

/// Chain A_1 >= A_2 >= ... >= A_n of nonempty clopens, each containing the
/// next: the factorization I = J_1 J_2 ... J_n into radical ideals J_k
/// supported on A_k (ideal containment J_1 <= ... <= J_n reverses the chain).
struct RadicalFactorization {
  std::vector<Clopen> chain;
};

Ideal mul(const Ideal& a, const Ideal& b);
Ideal radical(const Ideal& a);

// Level-set decomposition A_k = {p : fn(p) >= k}, k = 1..max(fn). This is
// the unique weakly descending chain of nonempty clopens whose indicators
// sum to fn. Rejects the unit ideal.
RadicalFactorization sp_factor(const Ideal& a);
// Inverse direction: fn = sum of the indicators. Validates the chain.
Ideal sp_product(const RadicalFactorization& f, const Space& space);

// Sharp maximal ideal = isolated point of the spectrum.
bool is_sharp(const Space& s, const Point& m);

// Sharp degree alpha: rank = alpha + 1 and X^{alpha+1} empty (scattered
// spaces only). Dull degree alpha: rank = alpha with X^alpha nonempty
// (spaces with a perfect component only). Exactly one of the two applies.
std::optional<Ordinal> sharp_degree(const Space& s);
std::optional<Ordinal> dull_degree(const Space& s);

// Spectrum of the overring R_alpha: the alpha-th derivative of the spectrum.
std::optional<Space> overring_spectrum(const Space& s, const Ordinal& alpha);

// Unique irredundant representation of a proper ideal over a finite spectrum
// as an intersection of powers of maximal ideals: the (point, multiplicity)
// pairs with positive multiplicity. Infinite spectra are unsupported.
std::vector<std::pair<Point, mpz_class>> max_power_decomposition(const Ideal& a);

enum class DegreeKind { Sharp, Dull };
const char* to_string(DegreeKind k);

struct DegreeReport {
  DegreeKind kind;
  Ordinal degree;
  Ordinal rank;
  FinalKind final_kind;  // size class of X^degree: Finite for sharp, Perfect for dull
  std::optional<mpz_class> final_count;
};

DegreeReport degree_report(const Space& s);

}  // namespace spdom
