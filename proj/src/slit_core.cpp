#include "parslit/slit_core.hpp"

#include <algorithm>
#include <string>

#include "parslit/errors.hpp"

namespace parslit {

int CellLabel::label_of(int x) const {
  for (std::size_t k = 0; k < nu_.size(); ++k) {
    if (std::find(nu_[k].begin(), nu_[k].end(), x) != nu_[k].end()) return static_cast<int>(k);
  }
  throw Error(ErrorCode::InternalAssertion, "level " + std::to_string(x) + " not in any cycle");
}

CellLabel validate_cell_label(const CellCandidate& c) {
  if (c.g < 0 || c.m < 0) throw Error(ErrorCode::Malformed, "g and m must be nonnegative");
  if (c.n != 1) throw Error(ErrorCode::Malformed, "only n = 1 is supported");
  const int h = 2 * c.g + c.m;
  if (h < 1) throw Error(ErrorCode::Malformed, "h = 2g + m must be at least 1");
  const int ground = 2 * h + 1;
  if (c.sigmas.size() != static_cast<std::size_t>(h + 1)) {
    throw Error(ErrorCode::Malformed, "expected " + std::to_string(h + 1) + " permutations, got " +
                                          std::to_string(c.sigmas.size()));
  }

  CellLabel label;
  label.g_ = c.g;
  label.m_ = c.m;
  for (const auto& s : c.sigmas) {
    if (s.size() != static_cast<std::size_t>(ground)) {
      throw Error(ErrorCode::Malformed, "permutation length " + std::to_string(s.size()) +
                                            ", expected " + std::to_string(ground));
    }
    label.sigmas_.emplace_back(s);
  }

  if (label.sigmas_[0] != Permutation::shift(static_cast<std::size_t>(ground))) {
    throw Error(ErrorCode::BadSigmaZero, "sigma_0 must map j to j+1 and 2h to 0");
  }
  for (int i = 1; i <= h; ++i) {
    if (label.sigma(i)(2 * h) != 0) {
      throw Error(ErrorCode::Fixed2hViolated,
                  "sigma_" + std::to_string(i) + "(" + std::to_string(2 * h) + ") = " +
                      std::to_string(label.sigma(i)(2 * h)));
    }
  }

  auto cs = cycles(label.sigma(h));
  if (cs.size() != static_cast<std::size_t>(c.m + 1)) {
    throw Error(ErrorCode::CycleCountMismatch, "sigma_h has " + std::to_string(cs.size()) +
                                                   " cycles, expected m + 1 = " +
                                                   std::to_string(c.m + 1));
  }

  if (c.nu.size() != cs.size()) {
    throw Error(ErrorCode::NuMismatch, "nu must list exactly m + 1 cycles");
  }
  std::vector<bool> used(cs.size(), false);
  for (std::size_t k = 0; k < c.nu.size(); ++k) {
    Cycle canon = canonical_cycle(c.nu[k]);
    auto it = std::find(cs.begin(), cs.end(), canon);
    if (it == cs.end()) {
      throw Error(ErrorCode::NuMismatch, "nu(" + std::to_string(k) + ") is not a cycle of sigma_h");
    }
    auto idx = static_cast<std::size_t>(it - cs.begin());
    if (used[idx]) throw Error(ErrorCode::NuMismatch, "nu is not injective");
    used[idx] = true;
    label.nu_.push_back(std::move(canon));
  }
  if (label.nu_[0].front() != 0) {
    throw Error(ErrorCode::NuMismatch, "nu(0) must be the cycle containing 0");
  }
  return label;
}

CellCandidate to_candidate(const CellLabel& label) {
  CellCandidate c;
  c.g = label.g();
  c.m = label.m();
  for (const auto& s : label.sigmas()) c.sigmas.push_back(s.one_line());
  c.nu = label.nu();
  return c;
}

SlitCoordinates normalize(std::vector<Rational> a, std::vector<Rational> b) {
  if (a.empty()) throw Error(ErrorCode::Malformed, "at least one a-coordinate is required");
  if (b.size() != 2 * a.size()) throw Error(ErrorCode::Malformed, "need exactly 2h b-coordinates");
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (!(a[i] < a[i - 1])) throw Error(ErrorCode::NotStrict, "a must be strictly decreasing");
  }
  for (std::size_t j = 1; j < b.size(); ++j) {
    if (!(b[j - 1] < b[j])) throw Error(ErrorCode::NotStrict, "b must be strictly increasing");
  }
  const Rational a1 = a.front();
  const Rational b1 = b.front();
  for (auto& x : a) x -= a1;
  for (auto& y : b) y -= b1;

  SlitCoordinates out;
  out.a_ = std::move(a);
  out.b_ = std::move(b);
  return out;
}

ParallelSlitDomain make_domain(CellLabel label, SlitCoordinates coords) {
  if (coords.h() != static_cast<std::size_t>(label.h())) {
    throw Error(ErrorCode::Malformed, "coordinates are for h = " + std::to_string(coords.h()) +
                                          ", label has h = " + std::to_string(label.h()));
  }
  return {std::move(label), std::move(coords)};
}

int moduli_dimension(int g, int n, int m) { return 6 * g - 6 + 5 * n + 3 * m - 1; }

int cell_dimension(const CellLabel& label) {
  const int h = label.h();
  const int dim = (h - 1) + (2 * h - 1);
  PARSLIT_ASSERT(dim == moduli_dimension(label.g(), label.n(), label.m()));
  return dim;
}

}  // namespace parslit
