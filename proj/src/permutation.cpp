#include "parslit/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "parslit/errors.hpp"

namespace parslit {

Permutation::Permutation(std::vector<int> one_line) : map_(std::move(one_line)) {
  const int n = static_cast<int>(map_.size());
  std::vector<bool> hit(map_.size(), false);
  for (int v : map_) {
    if (v < 0 || v >= n || hit[static_cast<std::size_t>(v)]) {
      throw Error(ErrorCode::Malformed,
                  "not a permutation of {0.." + std::to_string(n - 1) + "}");
    }
    hit[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

Permutation Permutation::shift(std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t j = 0; j < n; ++j) v[j] = static_cast<int>((j + 1) % n);
  return Permutation(std::move(v));
}

Permutation Permutation::transposition(std::size_t n, int a, int b) {
  auto p = identity(n);
  std::swap(p.map_[static_cast<std::size_t>(a)], p.map_[static_cast<std::size_t>(b)]);
  return p;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.map_.resize(map_.size());
  for (std::size_t x = 0; x < map_.size(); ++x) {
    inv.map_[static_cast<std::size_t>(map_[x])] = static_cast<int>(x);
  }
  return inv;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < map_.size(); ++x) {
    if (map_[x] != static_cast<int>(x)) return false;
  }
  return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  PARSLIT_ASSERT(a.size() == b.size());
  Permutation c;
  c.map_.resize(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) c.map_[x] = a(b(static_cast<int>(x)));
  return c;
}

std::vector<Cycle> cycles(const Permutation& p) {
  std::vector<Cycle> out;
  std::vector<bool> seen(p.size(), false);
  // Scanning starts in increasing order, so each cycle begins at its minimum
  // and the list comes out sorted.
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    Cycle c;
    for (int x = static_cast<int>(s); !seen[static_cast<std::size_t>(x)]; x = p(x)) {
      seen[static_cast<std::size_t>(x)] = true;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

Cycle canonical_cycle(std::span<const int> cycle) {
  Cycle c(cycle.begin(), cycle.end());
  if (!c.empty()) std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
  return c;
}

std::size_t cycle_index_of(const std::vector<Cycle>& cs, int x) {
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (std::find(cs[i].begin(), cs[i].end(), x) != cs[i].end()) return i;
  }
  throw Error(ErrorCode::InternalAssertion, "element not covered by cycles");
}

}  // namespace parslit
