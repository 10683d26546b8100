#include <doctest.h>

#include <algorithm>
#include <random>

#include "parslit/errors.hpp"
#include "parslit/permutation.hpp"

using namespace parslit;

TEST_CASE("cycles of small permutations") {
  CHECK(cycles(Permutation::identity(3)) == std::vector<Cycle>{{0}, {1}, {2}});
  CHECK(cycles(Permutation({1, 2, 0})) == std::vector<Cycle>{{0, 1, 2}});
  CHECK(cycles(Permutation({2, 1, 0})) == std::vector<Cycle>{{0, 2}, {1}});
}

TEST_CASE("one-line form must be a bijection") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), Error);
  CHECK_THROWS_AS(Permutation({0, 3, 1}), Error);
  try {
    Permutation({1, 1});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Malformed);
  }
}

TEST_CASE("composition applies the right factor first") {
  const Permutation a({1, 2, 0});
  const Permutation b({0, 2, 1});
  const Permutation ab = a * b;
  for (int x = 0; x < 3; ++x) CHECK(ab(x) == a(b(x)));
  CHECK((a * a.inverse()).is_identity());
  CHECK(Permutation::shift(5)(4) == 0);
  CHECK(Permutation::transposition(5, 1, 3)(3) == 1);
}

TEST_CASE("canonical rotation and lookup") {
  const std::vector<int> c{4, 1, 3};
  CHECK(canonical_cycle(c) == Cycle{1, 3, 4});
  const auto cs = cycles(Permutation({2, 0, 1, 3}));
  CHECK(cycle_index_of(cs, 3) == 1);
  CHECK(cycle_index_of(cs, 1) == 0);
}

TEST_CASE("property: cycles partition the ground set and reassemble the permutation") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    std::vector<int> one(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) one[static_cast<std::size_t>(i)] = i;
    std::shuffle(one.begin(), one.end(), rng);
    const Permutation p(one);
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    for (const auto& c : cycles(p)) {
      CHECK(c.front() == *std::min_element(c.begin(), c.end()));
      for (std::size_t k = 0; k < c.size(); ++k) {
        ++seen[static_cast<std::size_t>(c[k])];
        CHECK(p(c[k]) == c[(k + 1) % c.size()]);
      }
    }
    for (int s : seen) CHECK(s == 1);
  }
}
