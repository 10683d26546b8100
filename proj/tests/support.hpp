#ifndef PARSLIT_TESTS_SUPPORT_HPP
#define PARSLIT_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "parslit/census.hpp"
#include "parslit/flat_surface.hpp"
#include "parslit/slit_core.hpp"

namespace parslit::testing {

inline int below(std::mt19937_64& rng, int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); }

/// n distinct rationals with denominators up to 6, ascending.
inline std::vector<Rational> distinct_rationals(std::mt19937_64& rng, int n) {
  std::set<Rational> got;
  while (static_cast<int>(got.size()) < n) got.insert(ratio(below(rng, 61) - 30, 1 + below(rng, 6)));
  return {got.begin(), got.end()};
}

/// All top cells with 2g + m = h, from the stepped census; cached per h.
inline const std::vector<CellLabel>& cells_of_height(int h) {
  static std::map<int, std::vector<CellLabel>> cache;
  auto it = cache.find(h);
  if (it != cache.end()) return it->second;
  std::vector<CellLabel> all;
  for (int g = 0; 2 * g <= h; ++g) {
    for (const auto& e : enumerate_cells(g, h - 2 * g, CensusMethod::Stepped).cells) all.push_back(e.label);
  }
  return cache.emplace(h, std::move(all)).first->second;
}

/// A uniformly chosen cell of height h at random strict coordinates.
inline ParallelSlitDomain random_domain(std::mt19937_64& rng, int h) {
  const auto& cells = cells_of_height(h);
  const CellLabel& label = cells[static_cast<std::size_t>(below(rng, static_cast<int>(cells.size())))];
  auto a = distinct_rationals(rng, h);
  std::reverse(a.begin(), a.end());
  return make_domain(label, normalize(std::move(a), distinct_rationals(rng, 2 * h)));
}

/// Grid of a sigma sequence at the sample coordinates, without any label
/// check, so that invalid or degenerate data can be expressed.
inline GluedGrid raw_grid(const std::vector<Permutation>& sigmas) {
  const int h = static_cast<int>(sigmas.size()) - 1;
  std::vector<Column> cols;
  for (int p = 0; p <= h; ++p) {
    const int i = h - p;
    cols.push_back({i == h ? ExtRational::neg_inf() : ExtRational(-i - 1), i == 0 ? ExtRational::pos_inf() : ExtRational(-i),
                    sigmas[static_cast<std::size_t>(i)]});
  }
  const auto cs = cycles(sigmas.back());
  const std::size_t zc = cycle_index_of(cs, 0);
  std::vector<Strip> strips;
  for (int j = 0; j <= 2 * h; ++j) {
    const std::size_t ci = cycle_index_of(cs, j);
    const int label = ci == zc ? 0 : static_cast<int>(ci < zc ? ci + 1 : ci);
    strips.push_back({j == 0 ? ExtRational::neg_inf() : ExtRational(j), j == 2 * h ? ExtRational::pos_inf() : ExtRational(j + 1), label});
  }
  return GluedGrid(std::move(cols), std::move(strips));
}

/// sigma_0 followed by sigma_i = tau_i sigma_{i-1}.
inline std::vector<Permutation> stepped(int h, const std::vector<std::pair<int, int>>& taus) {
  const auto n = static_cast<std::size_t>(2 * h + 1);
  std::vector<Permutation> s{Permutation::shift(n)};
  for (auto [x, y] : taus) s.push_back(Permutation::transposition(n, x, y) * s.back());
  return s;
}

}  // namespace parslit::testing

#endif  // PARSLIT_TESTS_SUPPORT_HPP
