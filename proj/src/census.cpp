#include "parslit/census.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "parslit/errors.hpp"
#include "parslit/uniformizer.hpp"

namespace parslit {

std::string_view to_string(CensusMethod method) {
  return method == CensusMethod::Brute ? "brute" : "stepped";
}

CensusMethod parse_census_method(std::string_view text) {
  if (text == "brute") return CensusMethod::Brute;
  if (text == "stepped") return CensusMethod::Stepped;
  throw Error(ErrorCode::Malformed, "unknown census method '" + std::string(text) + "'");
}

ParallelSlitDomain sample_domain(const CellLabel& label) {
  const int h = label.h();
  std::vector<Rational> a;
  std::vector<Rational> b;
  for (int i = 1; i <= h; ++i) a.emplace_back(-i);
  for (int j = 1; j <= 2 * h; ++j) b.emplace_back(j);
  return make_domain(label, normalize(std::move(a), std::move(b)));
}

std::vector<CellLabel> all_labelings(int g, int m, const std::vector<Permutation>& sigmas) {
  const std::vector<Cycle> cs = cycles(sigmas.back());
  const std::size_t zero_cycle = cycle_index_of(cs, 0);
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i != zero_cycle) rest.push_back(i);
  }
  CellCandidate cand;
  cand.g = g;
  cand.m = m;
  for (const auto& s : sigmas) cand.sigmas.push_back(s.one_line());

  std::vector<CellLabel> out;
  do {
    cand.nu.assign(1, cs[zero_cycle]);
    for (std::size_t i : rest) cand.nu.push_back(cs[i]);
    out.push_back(validate_cell_label(cand));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

CellLabel standard_label(int g, int m) {
  if (g < 0 || m < 0 || 2 * g + m < 1) {
    throw Error(ErrorCode::Malformed, "standard_label needs g, m >= 0 and 2g + m >= 1");
  }
  const int h = 2 * g + m;
  const auto n = static_cast<std::size_t>(2 * h + 1);
  std::vector<std::pair<int, int>> taus;
  for (int blk = 0; blk < g; ++blk) {
    taus.emplace_back(4 * blk + 1, 4 * blk + 3);
    taus.emplace_back(4 * blk + 2, 4 * blk + 4);
  }
  for (int k = 0; k < m; ++k) taus.emplace_back(4 * g + 2 * k + 1, 4 * g + 2 * k + 2);

  std::vector<Permutation> sigmas{Permutation::shift(n)};
  for (auto [s, t] : taus) sigmas.push_back(Permutation::transposition(n, s, t) * sigmas.back());
  return all_labelings(g, m, sigmas).front();
}

namespace {

std::uint64_t saturating_power(std::uint64_t base, int exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

// All sigma with sigma(2h) = 0, in lexicographic order of their one-line form.
std::vector<Permutation> closing_permutations(int h) {
  std::vector<int> body(static_cast<std::size_t>(2 * h));
  std::iota(body.begin(), body.end(), 1);
  std::vector<Permutation> out;
  do {
    std::vector<int> one = body;
    one.push_back(0);
    out.emplace_back(std::move(one));
  } while (std::next_permutation(body.begin(), body.end()));
  return out;
}

class Collector {
 public:
  Collector(int g, int m, bool thorough) : g_(g), m_(m), h_(2 * g + m), thorough_(thorough) {}

  void consider(const std::vector<Permutation>& sigmas) {
    if (cycles(sigmas.back()).size() != static_cast<std::size_t>(m_ + 1)) return;
    switch (wall_profile(sigmas)) {
      case Profile::WrongOrder: return;
      case Profile::Crowded:
        if (!thorough_) return degenerate(sigmas, Diagnosis::NonSimpleOrColocated);
        break;
      case Profile::Saddle:
        if (!thorough_) return degenerate(sigmas, Diagnosis::SaddleConnection);
        break;
      case Profile::OnePerWall: break;
    }
    const auto labels = all_labelings(g_, m_, sigmas);
    const GluedGrid grid = glue(sample_domain(labels.front()));
    int gc = 0;
    try {
      gc = genus_via_cones(grid);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NonIntegralGenus) return;
      throw;
    }
    if (gc != g_) return;
    const GenericityReport rep = is_generic(grid);
    if (!rep.generic) return degenerate(sigmas, rep.diagnosis);
    const int ge = genus_via_euler(grid);
    std::vector<Rational> zx;
    for (const auto& z : cone_points(grid).zeros()) zx.push_back(z.x);
    std::sort(zx.begin(), zx.end(), std::greater<>());
    ++report_.sigma_count;
    for (const auto& lab : labels) {
      report_.cells.push_back({lab, gc, ge, ends(grid).m() + 1, zx});
      ++report_.label_count;
    }
  }

  CensusReport finish(CensusMethod method, std::uint64_t candidates) && {
    report_.g = g_;
    report_.m = m_;
    report_.h = h_;
    report_.method = method;
    report_.candidates = candidates;
    std::sort(report_.cells.begin(), report_.cells.end(),
              [](const CensusEntry& x, const CensusEntry& y) { return x.label < y.label; });
    return std::move(report_);
  }

 private:
  enum class Profile { WrongOrder, Crowded, Saddle, OnePerWall };

  // Cheap look at the wall monodromies rho_i = sigma_{i-1} sigma_i^{-1} on the
  // finite levels: a cycle of length k there is a cone point of angle 2 pi k,
  // and a leftward ray from that point passes a wall further left only where
  // the wall's monodromy fixes its level. Accepted candidates are still
  // decided by the full surface computation.
  Profile wall_profile(const std::vector<Permutation>& sigmas) const {
    const int n = 2 * h_ + 1;
    int order = 0;
    bool crowded = false;
    std::vector<int> inv(static_cast<std::size_t>(n));
    std::vector<std::vector<char>> moved(sigmas.size(), std::vector<char>(static_cast<std::size_t>(n), 0));
    for (std::size_t i = 1; i < sigmas.size(); ++i) {
      for (int x = 0; x < n; ++x) inv[static_cast<std::size_t>(sigmas[i](x))] = x;
      std::vector<char> seen(static_cast<std::size_t>(n), 0);
      int wall_order = 0;
      int wall_zeros = 0;
      for (int s = 1; s < n; ++s) {
        int len = 0;
        for (int x = s; !seen[static_cast<std::size_t>(x)]; x = sigmas[i - 1](inv[static_cast<std::size_t>(x)])) {
          seen[static_cast<std::size_t>(x)] = 1;
          ++len;
        }
        if (len > 1) {
          wall_order += len - 1;
          ++wall_zeros;
        }
      }
      for (int s = 1; s < n; ++s) moved[i][static_cast<std::size_t>(s)] = sigmas[i - 1](inv[static_cast<std::size_t>(s)]) != s;
      order += wall_order;
      if (wall_order != 1 || wall_zeros != 1) crowded = true;
    }
    if (order != h_) return Profile::WrongOrder;
    if (crowded) return Profile::Crowded;
    for (std::size_t i = 1; i < sigmas.size(); ++i) {
      for (std::size_t j = i + 1; j < sigmas.size(); ++j) {
        for (std::size_t s = 1; s < static_cast<std::size_t>(n); ++s) {
          if (moved[i][s] && moved[j][s]) return Profile::Saddle;
        }
      }
    }
    return Profile::OnePerWall;
  }

  void degenerate(const std::vector<Permutation>& sigmas, Diagnosis d) {
    ++report_.degenerate_count;
    ++report_.degenerate_by_diagnosis[d];
    if (report_.degenerate_examples.size() < kDegenerateExamples) {
      report_.degenerate_examples.push_back({sigmas, d});
    }
  }

  int g_;
  int m_;
  int h_;
  bool thorough_;
  CensusReport report_;
};

}  // namespace

CensusReport enumerate_cells(int g, int m, CensusMethod method, const CensusOptions& options) {
  const std::uint64_t bound = options.bound;
  if (g < 0 || m < 0 || 2 * g + m < 1) {
    throw Error(ErrorCode::Malformed, "census needs g, m >= 0 and 2g + m >= 1");
  }
  const int h = 2 * g + m;
  const auto n = static_cast<std::size_t>(2 * h + 1);

  std::uint64_t per_step = 0;
  if (method == CensusMethod::Brute) {
    per_step = 1;
    for (int k = 2; k <= 2 * h && per_step <= bound; ++k) per_step *= static_cast<std::uint64_t>(k);
  } else {
    per_step = static_cast<std::uint64_t>(h) * static_cast<std::uint64_t>(2 * h - 1);
  }
  const std::uint64_t total = per_step > bound ? bound + 1 : saturating_power(per_step, h, bound);
  if (total > bound) {
    throw Error(ErrorCode::TooLarge, std::string(to_string(method)) + " census for h = " +
                                         std::to_string(h) + " exceeds " + std::to_string(bound) +
                                         " candidates");
  }

  std::vector<Permutation> steps;
  if (method == CensusMethod::Brute) {
    steps = closing_permutations(h);
  } else {
    for (int s = 1; s <= 2 * h; ++s) {
      for (int t = s + 1; t <= 2 * h; ++t) steps.push_back(Permutation::transposition(n, s, t));
    }
  }

  Collector collector(g, m, options.thorough);
  std::vector<Permutation> sigmas{Permutation::shift(n)};
  std::vector<std::size_t> idx(static_cast<std::size_t>(h), 0);
  // Odometer over h choices; sigmas holds the prefix for the current digits.
  auto extend = [&](std::size_t from) {
    sigmas.resize(from + 1);
    for (std::size_t i = from; i < idx.size(); ++i) {
      const Permutation& st = steps[idx[i]];
      sigmas.push_back(method == CensusMethod::Brute ? st : st * sigmas.back());
    }
  };
  extend(0);
  while (true) {
    collector.consider(sigmas);
    std::size_t pos = idx.size();
    while (pos > 0 && idx[pos - 1] + 1 == steps.size()) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < idx.size(); ++i) idx[i] = 0;
    extend(pos - 1);
  }
  return std::move(collector).finish(method, total);
}

}  // namespace parslit
