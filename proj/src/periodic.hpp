#pragma once

#include <cstddef>

namespace spdom::detail {

// Canonical form of an eventually periodic sequence given as prefix + cyclic
// period: the period is reduced to its primitive root, then the prefix is
// shrunk while its last entry already matches the periodic continuation
// (each shrink rotates the period right by one). Works on std::string and
// std::vector alike.
template <typename Seq>
void canonicalize_eventually_periodic(Seq& prefix, Seq& period) {
  for (std::size_t d = 1; d <= period.size() / 2; ++d) {
    if (period.size() % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < period.size() && repeats; ++i)
      repeats = period[i] == period[i - d];
    if (repeats) {
      period.resize(d);
      break;
    }
  }
  while (!prefix.empty() && prefix.back() == period.back()) {
    period.insert(period.begin(), period.back());
    period.pop_back();
    prefix.pop_back();
  }
}

}  // namespace spdom::detail
