#include "spdom/completion.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "periodic.hpp"
#include "spdom/error.hpp"
#include "text_cursor.hpp"

namespace spdom {

EpSequence EpSequence::make(std::vector<mpz_class> prefix, std::vector<mpz_class> period) {
  if (period.empty()) throw DomainError("ep sequence: empty period");
  detail::canonicalize_eventually_periodic(prefix, period);
  EpSequence s;
  s.prefix_ = std::move(prefix);
  s.period_ = std::move(period);
  return s;
}

EpSequence EpSequence::constant(mpz_class value) { return make({}, {std::move(value)}); }

mpz_class EpSequence::at(std::size_t k) const {
  if (k < prefix_.size()) return prefix_[k];
  return period_[(k - prefix_.size()) % period_.size()];
}

bool EpSequence::is_zero() const {
  return prefix_.empty() && period_.size() == 1 && period_[0] == 0;
}

namespace {

template <typename Op>
EpSequence zip(const EpSequence& s, const EpSequence& t, Op op) {
  std::size_t cut = std::max(s.prefix().size(), t.prefix().size());
  std::size_t window = std::lcm(s.period().size(), t.period().size());
  std::vector<mpz_class> prefix, period;
  prefix.reserve(cut);
  period.reserve(window);
  for (std::size_t k = 0; k < cut; ++k) prefix.push_back(op(s.at(k), t.at(k)));
  for (std::size_t j = 0; j < window; ++j)
    period.push_back(op(s.at(cut + j), t.at(cut + j)));
  return EpSequence::make(std::move(prefix), std::move(period));
}

const mpz_class& min_of(const mpz_class& a, const mpz_class& b) {
  return cmp(a, b) <= 0 ? a : b;
}

const mpz_class& max_of(const mpz_class& a, const mpz_class& b) {
  return cmp(a, b) >= 0 ? a : b;
}

// Canonical residue in [0, n).
mpz_class residue(const mpz_class& value, const mpz_class& n) {
  mpz_class r = value % n;
  if (sgn(r) < 0) r += n;
  return r;
}

Space omega_space() { return Space::ordinal_interval(Ordinal::omega()); }

}  // namespace

EpSequence add(const EpSequence& s, const EpSequence& t) {
  return zip(s, t, [](const mpz_class& a, const mpz_class& b) { return mpz_class(a + b); });
}

EpSequence sub(const EpSequence& s, const EpSequence& t) {
  return zip(s, t, [](const mpz_class& a, const mpz_class& b) { return mpz_class(a - b); });
}

EpSequence meet(const EpSequence& s, const EpSequence& t) {
  return zip(s, t,
             [](const mpz_class& a, const mpz_class& b) { return mpz_class(min_of(a, b)); });
}

EpSequence join(const EpSequence& s, const EpSequence& t) {
  return zip(s, t,
             [](const mpz_class& a, const mpz_class& b) { return mpz_class(max_of(a, b)); });
}

EpSequence scale(const mpz_class& n, const EpSequence& s) {
  std::vector<mpz_class> prefix, period;
  for (const mpz_class& v : s.prefix()) prefix.push_back(n * v);
  for (const mpz_class& v : s.period()) period.push_back(n * v);
  return EpSequence::make(std::move(prefix), std::move(period));
}

bool leq(const EpSequence& s, const EpSequence& t) {
  std::size_t window = std::max(s.prefix().size(), t.prefix().size()) +
                       std::lcm(s.period().size(), t.period().size());
  for (std::size_t k = 0; k < window; ++k)
    if (cmp(s.at(k), t.at(k)) > 0) return false;
  return true;
}

bool nonneg(const EpSequence& s) {
  for (const mpz_class& v : s.prefix())
    if (sgn(v) < 0) return false;
  for (const mpz_class& v : s.period())
    if (sgn(v) < 0) return false;
  return true;
}

EpSequence psi(const StepFunction& f) {
  if (!(f.space() == omega_space()))
    throw UnsupportedError("psi: the completion is modeled only over ord(w), got " +
                           to_string(f.space()));
  // The piece containing w has an interval [cut', w]; beyond every finite
  // endpoint the function equals its value at w.
  mpz_class cut = 0;
  for (const auto& piece : f.pieces()) {
    for (const Interval& iv : piece.set.intervals()) {
      if (iv.hi.is_finite()) {
        cut = max_of(cut, mpz_class(iv.hi.finite_value() + 1));
      } else {
        cut = max_of(cut, iv.lo.finite_value());
      }
    }
  }
  std::vector<mpz_class> prefix;
  for (mpz_class k = 0; cmp(k, cut) < 0; ++k)
    prefix.push_back(f.eval(Point{OrdPoint{Ordinal(k)}}));
  mpz_class tail = f.eval(Point{OrdPoint{Ordinal::omega()}});
  return EpSequence::make(std::move(prefix), {std::move(tail)});
}

std::optional<StepFunction> psi_inverse(const EpSequence& s) {
  if (!s.eventually_constant()) return std::nullopt;
  Space space = omega_space();
  std::vector<StepFunction::Piece> pieces;
  for (std::size_t k = 0; k < s.prefix().size(); ++k) {
    Ordinal at(static_cast<unsigned long>(k));
    pieces.push_back(StepFunction::Piece{Clopen::interval(space, at, at), s.prefix()[k]});
  }
  pieces.push_back(StepFunction::Piece{
      Clopen::interval(space, Ordinal(static_cast<unsigned long>(s.prefix().size())),
                       Ordinal::omega()),
      s.period()[0]});
  return StepFunction::from_pieces(space, std::move(pieces));
}

std::pair<StepFunction, StepFunction> density_witnesses(const EpSequence& h) {
  if (!nonneg(h) || h.is_zero())
    throw DomainError("density witnesses: requires 0 < h");
  std::size_t first_positive = 0;
  std::size_t window = h.prefix().size() + h.period().size();
  while (first_positive < window && sgn(h.at(first_positive)) <= 0) ++first_positive;
  mpz_class top = 0;
  for (std::size_t k = 0; k < window; ++k) top = max_of(top, h.at(k));
  Space space = omega_space();
  Ordinal at(static_cast<unsigned long>(first_positive));
  StepFunction g1 = StepFunction::indicator(Clopen::interval(space, at, at));
  StepFunction g2 = StepFunction::constant(space, top);
  return {std::move(g1), std::move(g2)};
}

std::optional<EpSequence> divide_exact(const EpSequence& s, const mpz_class& n) {
  if (cmp(n, 1) < 0) throw DomainError("divide_exact: n must be >= 1");
  std::vector<mpz_class> prefix, period;
  for (const mpz_class& v : s.prefix()) {
    if (!mpz_divisible_p(v.get_mpz_t(), n.get_mpz_t())) return std::nullopt;
    prefix.push_back(v / n);
  }
  for (const mpz_class& v : s.period()) {
    if (!mpz_divisible_p(v.get_mpz_t(), n.get_mpz_t())) return std::nullopt;
    period.push_back(v / n);
  }
  return EpSequence::make(std::move(prefix), std::move(period));
}

CosetDivisibility coset_n_divisible(const EpSequence& g, const mpz_class& n) {
  if (cmp(n, 1) <= 0) throw DomainError("coset divisibility: n must be > 1");
  mpz_class common = residue(g.period()[0], n);
  for (std::size_t i = 1; i < g.period().size(); ++i) {
    if (residue(g.period()[i], n) != common)
      return CosetCertificate{g.prefix().size(), g.prefix().size() + i};
  }
  // All tail residues agree: lift by the eventually constant correction e
  // with g + e = 0 (mod n) everywhere.
  std::vector<mpz_class> e_prefix;
  for (const mpz_class& v : g.prefix()) {
    mpz_class r = residue(v, n);
    e_prefix.push_back(sgn(r) == 0 ? mpz_class(0) : mpz_class(n - r));
  }
  mpz_class e_tail = sgn(common) == 0 ? mpz_class(0) : mpz_class(n - common);
  EpSequence e = EpSequence::make(std::move(e_prefix), {std::move(e_tail)});
  auto f = divide_exact(add(g, e), n);
  if (!f || !(scale(n, *f) == add(g, e)))
    throw std::logic_error("coset divisibility: recomposition failed");
  return CosetWitness{std::move(*f), std::move(e)};
}

bool inv_equals_div(const Space& s) {
  return is_extremally_disconnected(s).extremally_disconnected;
}

EpSequence parse_ep_sequence(std::string_view text) {
  detail::Cursor cur{text};
  std::vector<mpz_class> prefix, period;
  if (cur.try_eat("pre")) {
    cur.expect('[', "ep sequence prefix");
    if (!cur.try_eat(']')) {
      do {
        prefix.push_back(cur.integer("ep sequence prefix"));
      } while (cur.try_eat(','));
      cur.expect(']', "ep sequence prefix");
    }
  }
  cur.expect("per", "ep sequence");
  cur.expect('[', "ep sequence period");
  do {
    period.push_back(cur.integer("ep sequence period"));
  } while (cur.try_eat(','));
  cur.expect(']', "ep sequence period");
  cur.expect_end("ep sequence");
  return EpSequence::make(std::move(prefix), std::move(period));
}

std::string to_string(const EpSequence& s) {
  std::string out;
  if (!s.prefix().empty()) {
    out += "pre[";
    for (std::size_t i = 0; i < s.prefix().size(); ++i) {
      if (i) out += ',';
      out += s.prefix()[i].get_str();
    }
    out += ']';
  }
  out += "per[";
  for (std::size_t i = 0; i < s.period().size(); ++i) {
    if (i) out += ',';
    out += s.period()[i].get_str();
  }
  out += ']';
  return out;
}

std::ostream& operator<<(std::ostream& os, const EpSequence& s) {
  return os << to_string(s);
}

}  // namespace spdom
