#include <doctest.h>

#include <stdexcept>
#include <string>

#include "core/components.hpp"
#include "core/enumerate.hpp"
#include "core/instance.hpp"
#include "core/patch.hpp"

using namespace ringforge;

namespace {

Instance& v1c() {
  static Instance inst =
      load_instance(std::string(RINGFORGE_DATA_DIR) + "/autf2.ring");
  return inst;
}

// every composition of 6 units is a ring, so any star is legal: a scaffold
// for pure footprint-geometry cases that the real instance's rings forbid
Instance& freefield() {
  static Instance inst = parse_instance(
      "color amber\n"
      "shape tri kind=triangle corners=amber:1,amber:1,amber:1\n"
      "shape loz kind=lozenge corners=amber:1,amber:2,amber:1,amber:2\n"
      "ring r6 word=amber:1,amber:1,amber:1,amber:1,amber:1,amber:1\n"
      "ring r5 word=amber:2,amber:1,amber:1,amber:1,amber:1\n"
      "ring r4a word=amber:2,amber:2,amber:1,amber:1\n"
      "ring r4b word=amber:2,amber:1,amber:2,amber:1\n"
      "ring r3 word=amber:2,amber:2,amber:2\n"
      "option orientation_sensitive=false\n");
  return inst;
}

Patch lozenge_row_patch(const Instance& inst, int n, int b) {
  std::string text;
  for (int a = 0; a < n; ++a)
    text += "piece loz at " + std::to_string(a) + "," + std::to_string(b) +
            ",up rot=0\n";
  return parse_patch(inst, text);
}

const DiamondComponent& component_containing(
    const std::vector<DiamondComponent>& comps, Cell c) {
  for (const DiamondComponent& comp : comps)
    for (Cell cc : comp.cells)
      if (cc == c) return comp;
  REQUIRE(false);
  return comps.front();
}

}  // namespace

TEST_CASE("a patch of triangles has no diamond components") {
  Patch p = parse_patch(v1c(),
                        "piece tri at 0,0,up rot=0\n"
                        "piece tri at 5,5,up rot=0\n");
  CHECK(diamond_components(p).empty());
}

TEST_CASE("lozenges sharing only a vertex form two components") {
  Patch p = parse_patch(v1c(),
                        "piece loz at 0,0,up rot=0\n"
                        "piece loz at 1,1,up rot=0\n");
  CHECK(diamond_components(p).size() == 2);
}

TEST_CASE("separated lozenge rows are separate components") {
  Patch p = parse_patch(v1c(),
                        "piece loz at 0,0,up rot=0\n"
                        "piece loz at 1,0,up rot=0\n"
                        "piece loz at 2,0,up rot=0\n"
                        "piece loz at 0,2,up rot=0\n"
                        "piece loz at 1,2,up rot=0\n"
                        "piece loz at 2,2,up rot=0\n");
  auto comps = diamond_components(p);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].placements.size() == 3);
  CHECK(comps[1].placements.size() == 3);
}

TEST_CASE("a sealed single lozenge is a 1x1 parallelogram") {
  Patch seed = lozenge_row_patch(v1c(), 1, 0);
  CompletionConstraints cons;
  cons.frozen = seed.cells();
  EnumResult r = enumerate_completions(seed, cell_ball(seed.cells(), 1), cons, {});
  REQUIRE(r.completions.size() >= 1);
  const Patch& w = r.completions[0];
  auto comps = diamond_components(w);
  const DiamondComponent& comp = component_containing(comps, Cell{0, 0, true});
  ComponentClass cc = classify_component(comp, w);
  CHECK(cc.shape == ComponentShape::parallelogram);
  CHECK(cc.m == 1);
  CHECK(cc.n == 1);
}

TEST_CASE("a sealed lozenge row is a 1xn parallelogram") {
  Patch seed = lozenge_row_patch(v1c(), 3, 0);
  CompletionConstraints cons;
  cons.frozen = seed.cells();
  EnumResult r = enumerate_completions(seed, cell_ball(seed.cells(), 1), cons, {});
  REQUIRE(r.completions.size() >= 1);
  const Patch& w = r.completions[0];
  auto comps = diamond_components(w);
  const DiamondComponent& comp = component_containing(comps, Cell{0, 0, true});
  CHECK(comp.placements.size() == 3);
  ComponentClass cc = classify_component(comp, w);
  CHECK(cc.shape == ComponentShape::parallelogram);
  CHECK(cc.m == 1);
  CHECK(cc.n == 3);
  CHECK(cc.full_rectangle);
  CHECK(!cc.open_east);
  CHECK(!cc.open_west);
  CHECK(!cc.open_north);
  CHECK(!cc.open_south);
}

TEST_CASE("a sealed 2x3 block is a 2x3 parallelogram") {
  // footprint geometry on the permissive scaffold: the real instance's rings
  // kill every width-2 seal, so the pure geometry case lives here
  std::string text;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 2; ++b)
      text += "piece loz at " + std::to_string(a) + "," + std::to_string(b) +
              ",up rot=0\n";
  text +=
      "piece tri at -1,0,down rot=1\npiece tri at -1,1,down rot=1\n"
      "piece tri at 3,0,up rot=0\npiece tri at 3,1,up rot=0\n"
      "piece tri at 0,-1,down rot=1\npiece tri at 1,-1,down rot=1\n"
      "piece tri at 2,-1,down rot=1\n"
      "piece tri at 0,2,up rot=0\npiece tri at 1,2,up rot=0\n"
      "piece tri at 2,2,up rot=0\n";
  Patch w = parse_patch(freefield(), text);
  auto comps = diamond_components(w);
  REQUIRE(comps.size() == 1);
  ComponentClass cc = classify_component(comps[0], w);
  CHECK(cc.shape == ComponentShape::parallelogram);
  CHECK(cc.m == 2);
  CHECK(cc.n == 3);
}

TEST_CASE("an unsealed block is undetermined with open sides") {
  std::string text;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      text += "piece loz at " + std::to_string(a) + "," + std::to_string(b) +
              ",up rot=0\n";
  Patch w = parse_patch(v1c(), text);
  auto comps = diamond_components(w);
  REQUIRE(comps.size() == 1);
  ComponentClass cc = classify_component(comps[0], w);
  CHECK(cc.shape == ComponentShape::finite_window_undetermined);
  CHECK(cc.rows == 4);
  CHECK(cc.cols == 4);
  CHECK(cc.full_rectangle);
  CHECK(cc.open_east);
  CHECK(cc.open_west);
  CHECK(cc.open_north);
  CHECK(cc.open_south);
}

TEST_CASE("a sealed corner violates the interior angle invariant") {
  // an L of lozenges sealed on all sides has a 5-unit reflex corner; the
  // permissive scaffold lets it be built, and the classifier must flag it
  Patch w = parse_patch(freefield(),
                        "piece loz at 0,0,up rot=0\n"
                        "piece loz at 1,0,up rot=0\n"
                        "piece loz at 0,1,up rot=0\n"
                        "piece tri at 1,1,up rot=0\n"
                        "piece tri at -1,0,down rot=1\n"
                        "piece tri at -1,1,down rot=1\n"
                        "piece tri at 0,-1,down rot=1\n"
                        "piece tri at 1,-1,down rot=1\n"
                        "piece tri at 2,0,up rot=0\n"
                        "piece tri at 0,2,up rot=0\n");
  auto comps = diamond_components(w);
  REQUIRE(comps.size() == 1);
  CHECK_THROWS_AS(classify_component(comps[0], w), std::logic_error);
}

TEST_CASE("mixed-axis components carry no lozenge-grid profile") {
  Patch p = parse_patch(freefield(), "piece loz at 0,0,up rot=0\n");
  bool placed = false;
  for (const Placement& pl : placements_covering(freefield(), Cell{-1, 1, false})) {
    if (freefield().shapes[pl.shape].kind != ShapeKind::lozenge) continue;
    auto cs = placement_cells(freefield(), pl);
    bool match = false;
    for (Cell c : cs)
      if (c == Cell{0, 1, true}) match = true;
    if (!match) continue;
    if (p.can_place(pl) == PlaceStatus::ok) {
      REQUIRE(p.place_mut(pl) == PlaceStatus::ok);
      placed = true;
      break;
    }
  }
  REQUIRE(placed);
  auto comps = diamond_components(p);
  REQUIRE(comps.size() == 1);
  REQUIRE(comps[0].placements.size() == 2);
  ComponentClass cc = classify_component(comps[0], p);
  CHECK(cc.shape == ComponentShape::finite_window_undetermined);
  CHECK(cc.rows == 0);
  CHECK(cc.cols == 0);
}
