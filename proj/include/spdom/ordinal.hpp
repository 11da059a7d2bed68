#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace spdom {

/// Ordinal below epsilon_0 in hereditary Cantor normal form:
/// w^{e1}*c1 + ... + w^{ek}*ck with e1 > e2 > ... > ek (the exponents are
/// Ordinals themselves) and every coefficient >= 1. The empty term list
/// denotes 0. The form is unique, so structural equality decides equality.
class Ordinal {
 public:
  struct Term;
  using Terms = std::vector<Term>;

  Ordinal();                          // zero
  explicit Ordinal(unsigned long n);  // finite ordinal
  explicit Ordinal(const mpz_class& n);
  explicit Ordinal(Terms terms);  // terms must already be valid CNF

  Ordinal(const Ordinal&);
  Ordinal(Ordinal&&) noexcept;
  Ordinal& operator=(const Ordinal&);
  Ordinal& operator=(Ordinal&&) noexcept;
  ~Ordinal();

  static Ordinal omega();
  static Ordinal omega_pow(const Ordinal& exponent);  // w^exponent

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_finite() const;
  mpz_class finite_value() const;             // requires is_finite()
  const Ordinal& leading_exponent() const;    // requires nonzero
  const mpz_class& leading_coefficient() const;
  const Ordinal& least_exponent() const;      // exponent of the last term

  friend bool operator==(const Ordinal& a, const Ordinal& b);

 private:
  Terms terms_;
};

struct Ordinal::Term {
  Ordinal exponent;
  mpz_class coefficient;

  friend bool operator==(const Term& a, const Term& b) {
    return a.exponent == b.exponent && a.coefficient == b.coefficient;
  }
};

// Total order: lexicographic on term sequences by (exponent, coefficient).
std::strong_ordering compare(const Ordinal& a, const Ordinal& b);
inline std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  return compare(a, b);
}

enum class OrdinalKind { Zero, Successor, Limit };

struct OrdinalClass {
  OrdinalKind kind;
  std::optional<Ordinal> predecessor;  // set exactly when kind == Successor
};

struct OrdinalDivMod {
  Ordinal quotient;
  Ordinal remainder;
};

// CNF addition: terms of a below the leading exponent of b are absorbed.
Ordinal add(const Ordinal& a, const Ordinal& b);
// CNF multiplication by left-distributing over the CNF of b.
Ordinal mul(const Ordinal& a, const Ordinal& b);
Ordinal succ(const Ordinal& a);
// lambda = w^alpha * q + r with r < w^alpha.
OrdinalDivMod divmod(const Ordinal& lambda, const Ordinal& alpha);
OrdinalClass classify(const Ordinal& a);
bool is_successor_or_zero(const Ordinal& a);

inline Ordinal operator+(const Ordinal& a, const Ordinal& b) { return add(a, b); }
inline Ordinal operator*(const Ordinal& a, const Ordinal& b) { return mul(a, b); }

// Grammar: ordinal := term ("+" term)*
//          term    := NAT | "w" | "w" "^" factor ("*" NAT)? | "w" "*" NAT
//          factor  := NAT | "(" ordinal ")"
// Whitespace is insignificant. Arbitrary sums are normalized to CNF.
Ordinal parse_ordinal(std::string_view text);
std::string to_string(const Ordinal& o);
std::ostream& operator<<(std::ostream& os, const Ordinal& o);

}  // namespace spdom
