#include <doctest.h>

#include <random>
#include <set>
#include <string>

#include "parslit/census.hpp"
#include "parslit/errors.hpp"
#include "parslit/scramble.hpp"
#include "parslit/svg.hpp"
#include "support.hpp"

using namespace parslit;

namespace {

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

// Values of attribute `attr` on every element whose text starts with `tag`.
std::multiset<std::string> attr_values(const std::string& svg, const std::string& tag, const std::string& attr) {
  std::multiset<std::string> out;
  for (auto pos = svg.find(tag); pos != std::string::npos; pos = svg.find(tag, pos + 1)) {
    const auto end = svg.find('>', pos);
    const auto a = svg.find(" " + attr + "=\"", pos);
    if (a == std::string::npos || a > end) continue;
    const auto v = a + attr.size() + 3;
    out.insert(svg.substr(v, svg.find('"', v) - v));
  }
  return out;
}

}  // namespace

TEST_CASE("h = 1 domain in the window -2:1:-1:2") {
  const std::string svg = render_svg(sample_domain(standard_label(0, 1)), parse_view("-2:1:-1:2"));
  CHECK(count(svg, "<line class=\"slit\"") == 2);
  // 800 px for 3 units: y = 0 and y = 1 sit at 533.333 and 266.667, x = 0 at 533.333.
  CHECK(attr_values(svg, "<line class=\"slit\"", "y1") == std::multiset<std::string>{"266.667", "533.333"});
  CHECK(attr_values(svg, "<line class=\"slit\"", "x1") == std::multiset<std::string>{"0.000", "0.000"});
  CHECK(attr_values(svg, "<line class=\"slit\"", "x2") == std::multiset<std::string>{"533.333", "533.333"});
  CHECK(count(svg, "a1=0") == 1);
  CHECK(count(svg, "class=\"link\"") == 1);
}

TEST_CASE("rendering is byte-deterministic") {
  const ParallelSlitDomain x = sample_domain(standard_label(1, 1));
  CHECK(render_svg(x) == render_svg(x));
  const GluedGrid g = scramble(glue(x), 3);
  CHECK(render_svg(g) == render_svg(g));
}

TEST_CASE("h = 4 domain shows 8 slits at 4 tip columns") {
  const std::string svg = render_svg(sample_domain(standard_label(1, 2)), parse_view("-6:2:-2:10"));
  CHECK(count(svg, "<line class=\"slit\"") == 8);
  const auto tips = attr_values(svg, "<circle class=\"tip\"", "cx");
  CHECK(std::set<std::string>(tips.begin(), tips.end()).size() == 4);
  CHECK(count(svg, "class=\"link\"") == 4);
}

TEST_CASE("grid pictures carry rectangles and zeros") {
  const std::string svg = render_svg(glue(sample_domain(standard_label(0, 1))));
  CHECK(count(svg, "<line class=\"slit\"") == 2);
  CHECK(count(svg, "class=\"rectangles\"") == 1);
  CHECK(count(svg, "class=\"zeros\"") == 1);
}

TEST_CASE("view parsing") {
  const View v = parse_view("-1/2:3:0:2");
  CHECK(v.xmin == ratio(-1, 2));
  CHECK(v.ymax == 2);
  for (const char* bad : {"1:1:0:1", "0:1:2:2", "3:1:0:1"}) {
    try {
      (void)parse_view(bad);
      FAIL("expected EmptyView");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::EmptyView);
    }
  }
  CHECK_THROWS_AS(parse_view("0:1:2"), Error);
  CHECK_THROWS_AS(parse_view("a:1:0:1"), Error);
}
