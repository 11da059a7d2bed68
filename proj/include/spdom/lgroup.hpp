#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spdom/space.hpp"

namespace spdom {

/// Element of C(X, Z): a continuous integer-valued function on a Space,
/// kept in canonical piece form — one piece per distinct value, pieces
/// sorted by value, no empty piece, pieces partition the space. Canonical
/// form is unique, so equality is structural.
class StepFunction {
 public:
  struct Piece {
    Clopen set;
    mpz_class value;
    friend bool operator==(const Piece& a, const Piece& b) {
      return a.value == b.value && a.set == b.set;
    }
  };

  // Validates that the pieces partition the space, then canonicalizes.
  static StepFunction from_pieces(const Space& space, std::vector<Piece> pieces);
  static StepFunction constant(const Space& space, mpz_class value);
  static StepFunction indicator(const Clopen& set);  // chi_A

  const Space& space() const { return space_; }
  const std::vector<Piece>& pieces() const { return pieces_; }

  mpz_class eval(const Point& p) const;
  const mpz_class& min_value() const { return pieces_.front().value; }
  const mpz_class& max_value() const { return pieces_.back().value; }
  Clopen support() const;  // where the value is nonzero; clopen automatically
  bool is_zero() const;

  friend bool operator==(const StepFunction& a, const StepFunction& b) {
    return a.space_ == b.space_ && a.pieces_ == b.pieces_;
  }

 private:
  StepFunction() = default;
  Space space_;
  std::vector<Piece> pieces_;
};

StepFunction operator+(const StepFunction& f, const StepFunction& g);
StepFunction operator-(const StepFunction& f);
StepFunction operator-(const StepFunction& f, const StepFunction& g);
StepFunction operator*(const mpz_class& k, const StepFunction& f);
StepFunction meet(const StepFunction& f, const StepFunction& g);  // pointwise min
StepFunction join(const StepFunction& f, const StepFunction& g);  // pointwise max
bool leq(const StepFunction& f, const StepFunction& g);           // pointwise <=

// Witness against n*f <= g for all n: when f is not <= 0, some n with
// not(n*f <= g); none exactly when f <= 0. Together with leq this makes the
// archimedean property of C(X, Z) checkable per pair.
std::optional<mpz_class> archimedean_witness(const StepFunction& f, const StepFunction& g);

// Grammar: comma-separated `clopen "->" INT` pieces, e.g. [0,3]->2,[4,w]->0.
StepFunction parse_step_function(std::string_view text, const Space& space);
std::string to_string(const StepFunction& f);
std::ostream& operator<<(std::ostream& os, const StepFunction& f);

}  // namespace spdom
