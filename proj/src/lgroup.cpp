#include "spdom/lgroup.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <utility>

#include "space_internal.hpp"
#include "spdom/error.hpp"
#include "text_cursor.hpp"

namespace spdom {

namespace {

void require_same_space(const Space& a, const Space& b, const char* where) {
  if (!(a == b)) throw DomainError(std::string(where) + ": mismatched spaces");
}

struct MpzLess {
  bool operator()(const mpz_class& a, const mpz_class& b) const { return cmp(a, b) < 0; }
};

}  // namespace

StepFunction StepFunction::from_pieces(const Space& space, std::vector<Piece> pieces) {
  std::map<mpz_class, Clopen, MpzLess> by_value;
  Clopen covered = Clopen::empty(space);
  for (Piece& p : pieces) {
    require_same_space(space, p.set.space(), "step function piece");
    if (p.set.is_empty()) continue;
    if (!clop_intersect(covered, p.set).is_empty())
      throw DomainError("step function: pieces overlap");
    covered = clop_union(covered, p.set);
    auto [it, fresh] = by_value.emplace(p.value, p.set);
    if (!fresh) it->second = clop_union(it->second, p.set);
  }
  if (!covered.is_whole())
    throw DomainError("step function: pieces leave a gap");
  StepFunction f;
  f.space_ = space;
  for (auto& [value, set] : by_value) f.pieces_.push_back(Piece{std::move(set), value});
  return f;
}

StepFunction StepFunction::constant(const Space& space, mpz_class value) {
  return from_pieces(space, {Piece{Clopen::whole(space), std::move(value)}});
}

StepFunction StepFunction::indicator(const Clopen& set) {
  return from_pieces(set.space(), {Piece{set, 1}, Piece{clop_complement(set), 0}});
}

mpz_class StepFunction::eval(const Point& p) const {
  for (const Piece& piece : pieces_)
    if (point_in_clopen(p, piece.set)) return piece.value;
  throw DomainError("step function: point does not lie in the space");
}

Clopen StepFunction::support() const {
  Clopen s = Clopen::empty(space_);
  for (const Piece& piece : pieces_)
    if (piece.value != 0) s = clop_union(s, piece.set);
  return s;
}

bool StepFunction::is_zero() const {
  return pieces_.size() == 1 && pieces_.front().value == 0;
}

namespace {

template <typename Op>
StepFunction pointwise(const StepFunction& f, const StepFunction& g, Op op,
                       const char* where) {
  require_same_space(f.space(), g.space(), where);
  std::vector<StepFunction::Piece> cells;
  for (const auto& pf : f.pieces()) {
    for (const auto& pg : g.pieces()) {
      Clopen cell = clop_intersect(pf.set, pg.set);
      if (!cell.is_empty())
        cells.push_back(StepFunction::Piece{std::move(cell), op(pf.value, pg.value)});
    }
  }
  return StepFunction::from_pieces(f.space(), std::move(cells));
}

}  // namespace

StepFunction operator+(const StepFunction& f, const StepFunction& g) {
  return pointwise(f, g, [](const mpz_class& a, const mpz_class& b) { return mpz_class(a + b); },
                   "step function sum");
}

StepFunction operator-(const StepFunction& f) {
  std::vector<StepFunction::Piece> pieces;
  for (const auto& p : f.pieces())
    pieces.push_back(StepFunction::Piece{p.set, mpz_class(-p.value)});
  return StepFunction::from_pieces(f.space(), std::move(pieces));
}

StepFunction operator-(const StepFunction& f, const StepFunction& g) { return f + (-g); }

StepFunction operator*(const mpz_class& k, const StepFunction& f) {
  std::vector<StepFunction::Piece> pieces;
  for (const auto& p : f.pieces())
    pieces.push_back(StepFunction::Piece{p.set, mpz_class(k * p.value)});
  return StepFunction::from_pieces(f.space(), std::move(pieces));
}

StepFunction meet(const StepFunction& f, const StepFunction& g) {
  return pointwise(f, g,
                   [](const mpz_class& a, const mpz_class& b) { return cmp(a, b) <= 0 ? a : b; },
                   "step function meet");
}

StepFunction join(const StepFunction& f, const StepFunction& g) {
  return pointwise(f, g,
                   [](const mpz_class& a, const mpz_class& b) { return cmp(a, b) >= 0 ? a : b; },
                   "step function join");
}

bool leq(const StepFunction& f, const StepFunction& g) {
  require_same_space(f.space(), g.space(), "step function comparison");
  for (const auto& pf : f.pieces())
    for (const auto& pg : g.pieces())
      if (cmp(pf.value, pg.value) > 0 && !clop_intersect(pf.set, pg.set).is_empty())
        return false;
  return true;
}

std::optional<mpz_class> archimedean_witness(const StepFunction& f, const StepFunction& g) {
  require_same_space(f.space(), g.space(), "archimedean witness");
  if (sgn(f.max_value()) <= 0) return std::nullopt;  // f <= 0: no witness owed
  // Any point where f >= 1 defeats g once n clears g there.
  Point p = *sample_point(f.pieces().back().set);
  mpz_class bound = g.eval(p) + 1;
  return cmp(bound, 1) < 0 ? mpz_class(1) : bound;
}

StepFunction parse_step_function(std::string_view text, const Space& space) {
  detail::Cursor cur{text};
  std::vector<StepFunction::Piece> pieces;
  do {
    Clopen set = detail::parse_clopen_items(cur, space);
    cur.expect("->", "step function piece");
    mpz_class value = cur.integer("step function value");
    pieces.push_back(StepFunction::Piece{std::move(set), std::move(value)});
  } while (cur.try_eat(','));
  cur.expect_end("step function");
  return StepFunction::from_pieces(space, std::move(pieces));
}

std::string to_string(const StepFunction& f) {
  std::string out;
  bool first = true;
  for (const auto& p : f.pieces()) {
    if (!first) out += ',';
    first = false;
    out += to_string(p.set);
    out += "->";
    out += p.value.get_str();
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const StepFunction& f) {
  return os << to_string(f);
}

}  // namespace spdom
