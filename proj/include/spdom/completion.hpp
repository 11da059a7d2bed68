#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "spdom/lgroup.hpp"

namespace spdom {

/// Bounded eventually periodic integer sequence in canonical form (primitive
/// period, minimal prefix): the computable fragment of C(EX, Z) for
/// X = [0, w]. Eventually constant sequences (period length 1) are exactly
/// the image of psi, i.e. the copy of Inv inside Div. Equality is structural.
class EpSequence {
 public:
  // Canonicalizes; the period must be nonempty.
  static EpSequence make(std::vector<mpz_class> prefix, std::vector<mpz_class> period);
  static EpSequence constant(mpz_class value);

  const std::vector<mpz_class>& prefix() const { return prefix_; }
  const std::vector<mpz_class>& period() const { return period_; }
  mpz_class at(std::size_t k) const;
  bool eventually_constant() const { return period_.size() == 1; }
  bool is_zero() const;

  friend bool operator==(const EpSequence& a, const EpSequence& b) {
    return a.prefix_ == b.prefix_ && a.period_ == b.period_;
  }

 private:
  EpSequence() = default;
  std::vector<mpz_class> prefix_;
  std::vector<mpz_class> period_;
};

EpSequence add(const EpSequence& s, const EpSequence& t);
EpSequence sub(const EpSequence& s, const EpSequence& t);
EpSequence meet(const EpSequence& s, const EpSequence& t);  // pointwise min
EpSequence join(const EpSequence& s, const EpSequence& t);  // pointwise max
EpSequence scale(const mpz_class& n, const EpSequence& s);
bool leq(const EpSequence& s, const EpSequence& t);
bool nonneg(const EpSequence& s);

// The dense embedding C(X,Z) -> C(EX,Z) for X = ord(w): sampling at the
// integer points; the value at w becomes the constant tail. Any other space
// is unsupported.
EpSequence psi(const StepFunction& f);

// Inverse on the image: defined exactly for eventually constant sequences,
// which characterize membership in Inv inside Div.
std::optional<StepFunction> psi_inverse(const EpSequence& s);

// For 0 < h, step functions g1, g2 with 0 < psi(g1) <= h <= psi(g2):
// g1 = chi_{[k,k]} at the first index where h is positive, g2 = max(h) * chi_X.
std::pair<StepFunction, StepFunction> density_witnesses(const EpSequence& h);

// Some f with n*f = s, exactly when every entry of s is divisible by n.
std::optional<EpSequence> divide_exact(const EpSequence& s, const mpz_class& n);

/// n*f = g + e with e eventually constant: the coset g + Im(psi) is
/// divisible by n in Div/Inv.
struct CosetWitness {
  EpSequence f;
  EpSequence e;
};

/// Tail indices with g(k1) != g(k2) (mod n): no witness can exist, since
/// eventually n*f - e is constant mod n while both residues recur forever.
struct CosetCertificate {
  std::size_t k1;
  std::size_t k2;
};

using CosetDivisibility = std::variant<CosetWitness, CosetCertificate>;

// Decides n-divisibility of the coset g + Im(psi) in the cokernel Div/Inv
// for n > 1. Criterion: all period entries of g congruent mod n.
CosetDivisibility coset_n_divisible(const EpSequence& g, const mpz_class& n);

// Div = Inv exactly when the spectrum is extremally disconnected; in this
// model, exactly for finite spaces, where the completion is the identity.
bool inv_equals_div(const Space& s);

// Grammar: "pre[" INT ("," INT)* "]"? "per[" INT ("," INT)* "]";
// pre[] may be omitted or empty, per[...] is mandatory and nonempty.
EpSequence parse_ep_sequence(std::string_view text);
std::string to_string(const EpSequence& s);
std::ostream& operator<<(std::ostream& os, const EpSequence& s);

}  // namespace spdom
