#include <doctest.h>

#include <algorithm>
#include <set>

#include "core/instance.hpp"
#include "core/patch.hpp"

using namespace ringforge;

namespace {

Instance v1() {
  static Instance inst = [] {
    Instance i = load_instance(std::string(RINGFORGE_DATA_DIR) + "/autf2.ring");
    return i;
  }();
  return inst;
}

int color(const Instance& inst, const std::string& name) { return inst.color_id(name); }

// the placement of a triangle on `c` with the given colors at two named
// vertices (the third corner is then determined)
Placement find_tri(const Instance& inst, Cell c, Vtx at1, const std::string& col1, Vtx at2,
                   const std::string& col2) {
  for (const Placement& p : placements_covering(inst, c)) {
    if (inst.shapes[p.shape].kind != ShapeKind::triangle) continue;
    bool ok1 = false, ok2 = false;
    for (const CornerSlot& cs : placement_corners(inst, p)) {
      if (cs.v == at1 && cs.arc.color == color(inst, col1)) ok1 = true;
      if (cs.v == at2 && cs.arc.color == color(inst, col2)) ok2 = true;
    }
    if (ok1 && ok2) return p;
  }
  FAIL("no matching triangle placement");
  return {};
}

Placement find_loz(const Instance& inst, Cell c1, Cell c2) {
  for (const Placement& p : placements_covering(inst, c1)) {
    if (inst.shapes[p.shape].kind != ShapeKind::lozenge) continue;
    auto cells = placement_cells(inst, p);
    if (std::find(cells.begin(), cells.end(), c2) != cells.end()) return p;
  }
  FAIL("no lozenge placement covering both cells");
  return {};
}

std::string embedded_ring_name(const Instance& inst, const Patch& patch, Vtx v) {
  auto embeds = ring_embeds(inst, patch.star_arcs(v));
  REQUIRE(!embeds.empty());
  std::set<std::string> names;
  for (const RingPose& rp : embeds) names.insert(inst.rings[rp.ring].name);
  REQUIRE(names.size() == 1);
  return *names.begin();
}

// rows [0,2] two-strip: vertical lozenges, up-triangles below, down-triangles
// above, columns [a0,a1]
Patch two_strip(const Instance& inst, int a0, int a1) {
  Patch patch(inst);
  for (int a = a0; a <= a1; ++a) {
    REQUIRE(patch.place_mut(find_loz(inst, {a, 1, true}, {a, 0, false})) == PlaceStatus::ok);
    REQUIRE(patch.place_mut(find_tri(inst, {a, 0, true}, {a, 0}, "green", {a, 1}, "red")) ==
            PlaceStatus::ok);
    REQUIRE(patch.place_mut(find_tri(inst, {a, 1, false}, {a + 1, 1}, "red", {a, 2}, "purple")) ==
            PlaceStatus::ok);
  }
  return patch;
}

}  // namespace

TEST_CASE("placements covering a cell: colored-object census") {
  Instance inst = v1();
  auto ups = placements_covering(inst, {0, 0, true});
  auto downs = placements_covering(inst, {4, -2, false});
  int tri = 0, loz = 0;
  for (auto& p : ups) (inst.shapes[p.shape].kind == ShapeKind::triangle ? tri : loz)++;
  CHECK(tri == 6);  // 3 rotations x 2 reflections, all colored differently
  CHECK(loz == 3);  // 3 footprints; the blue/yellow coloring is symmetric
  CHECK(ups.size() == 9);
  CHECK(downs.size() == 9);
  for (auto& p : ups) {
    auto cells = placement_cells(inst, p);
    CHECK(std::count(cells.begin(), cells.end(), Cell{0, 0, true}) == 1);
  }
}

TEST_CASE("grid vertex: four horizontal lozenges close an exact grid ring") {
  Instance inst = v1();
  Patch patch(inst);
  for (auto [a, b] : {std::pair{0, 0}, {-1, 0}, {-1, -1}, {0, -1}})
    REQUIRE(patch.place_mut(find_loz(inst, {a, b, true}, {a, b, false})) == PlaceStatus::ok);
  CHECK(patch.star_units({0, 0}) == 6);
  CHECK(embedded_ring_name(inst, patch, {0, 0}) == "grid");
  // the wrap-free arcs: blue at 0 and 3, yellow pairs at {1,2} and {4,5}
  auto arcs = patch.star_arcs({0, 0});
  REQUIRE(arcs.size() == 4);
  std::set<std::pair<int, int>> got;
  for (auto& pa : arcs) got.insert({pa.pos, pa.arc.len});
  CHECK(got == std::set<std::pair<int, int>>{{0, 1}, {1, 2}, {3, 1}, {4, 2}});
}

TEST_CASE("two-strip fragment: interior stars close apex and boundary stays legal") {
  Instance inst = v1();
  Patch patch = two_strip(inst, 0, 2);
  CHECK(patch.cell_count() == 12);

  // interior middle vertices carry the exact apex ring, yellow wrapping 5..0
  for (int a = 1; a <= 2; ++a) {
    CHECK(patch.star_units({a, 1}) == 6);
    CHECK(embedded_ring_name(inst, patch, {a, 1}) == "apex");
  }
  auto arcs = patch.star_arcs({1, 1});
  bool wrapped = false;
  for (auto& pa : arcs)
    if (pa.pos == 5 && pa.arc.len == 2) wrapped = true;
  CHECK(wrapped);

  // top/bottom vertices are partial but all legal (checked by construction),
  // and their runs never exceed what a border ring allows
  for (Vtx v : patch.touched_vertices()) {
    CHECK(!ring_embeds(inst, patch.star_arcs(v)).empty());
    CHECK(patch.longest_run(v) <= 6);
  }
}

TEST_CASE("adjacent red corners at one vertex are rejected") {
  Instance inst = v1();
  Patch patch(inst);
  REQUIRE(patch.place_mut(find_tri(inst, {0, 0, true}, {0, 0}, "red", {1, 0}, "green")) ==
          PlaceStatus::ok);
  // red into sector 1 of (0,0): no ring has two adjacent red units
  Placement bad = find_tri(inst, {-1, 0, false}, {0, 0}, "red", {0, 1}, "purple");
  CHECK(patch.place_mut(bad) == PlaceStatus::illegal_vertex);
  CHECK(patch.cell_count() == 1);  // rolled back
  CHECK(patch.placements().size() == 1);
  // green next to red is just as dead (red only ever neighbors yellow)
  Placement alsobad = find_tri(inst, {-1, 0, false}, {0, 0}, "green", {0, 1}, "purple");
  CHECK(patch.place_mut(alsobad) == PlaceStatus::illegal_vertex);
  // a lozenge's yellow obtuse corner into sectors {1,2} fits the apex ring
  CHECK(patch.place_mut(find_loz(inst, {-1, 0, false}, {-1, 0, true})) == PlaceStatus::ok);
}

TEST_CASE("overlap is rejected and unplace_last restores state") {
  Instance inst = v1();
  Patch patch(inst);
  REQUIRE(patch.place_mut(find_loz(inst, {0, 0, true}, {0, 0, false})) == PlaceStatus::ok);
  CHECK(patch.place_mut(find_loz(inst, {0, 0, true}, {-1, 0, false})) == PlaceStatus::overlap);
  std::string before = oriented_form(patch);
  REQUIRE(patch.place_mut(find_loz(inst, {1, 1, true}, {1, 1, false})) == PlaceStatus::ok);
  patch.unplace_last();
  CHECK(oriented_form(patch) == before);
  CHECK(patch.cell_count() == 2);
}

TEST_CASE("canonical form is invariant under the full symmetry group") {
  Instance inst = v1();
  Patch patch = two_strip(inst, 0, 1);
  std::string canon = canonical_form(patch);
  CHECK(!canon.empty());
  int distinct_oriented = 0;
  std::set<std::string> seen;
  for (const Iso& g0 : point_group(true)) {
    for (Vtx t : {Vtx{0, 0}, Vtx{3, -2}, Vtx{-7, 5}}) {
      Iso g{g0.r, g0.m, t};
      Patch img = transformed(patch, g);
      CHECK(canonical_form(img) == canon);
      if (seen.insert(oriented_form(img)).second) ++distinct_oriented;
    }
  }
  CHECK(distinct_oriented > 1);   // the fragment is not symmetric under everything
  CHECK(distinct_oriented <= 12); // translation already normalized away
}

TEST_CASE("patch text round-trip") {
  Instance inst = v1();
  Patch patch = two_strip(inst, 0, 1);
  std::string text = patch_to_string(patch);
  Patch back = parse_patch(inst, text);
  CHECK(oriented_form(back) == oriented_form(patch));
  CHECK(patch_to_string(back) == text);

  CHECK_THROWS_WITH_AS(parse_patch(inst, "piece tri at 0,0,down rot=0\n"),
                       "line 1: orientation 'down' inconsistent with rot/flip", ParseError);
  CHECK_THROWS_AS(parse_patch(inst, "piece tri at 0,0,up rot=0\npiece tri at 0,0,up rot=0\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_patch(inst, "piece nope at 0,0,up rot=0\n"), ParseError);
  // comments and blank lines are fine
  Patch c = parse_patch(inst, "# header\n\npiece loz at 2,-1,up rot=0\n");
  CHECK(c.cell_count() == 2);
}

TEST_CASE("restriction keeps only fully-contained placements and stays legal") {
  Instance inst = v1();
  Patch patch = two_strip(inst, 0, 2);
  std::vector<Cell> keep;
  for (Cell c : patch.cells())
    if (c.a <= 1) keep.push_back(c);
  Patch sub = restricted_to(patch, keep);
  CHECK(sub.cell_count() < patch.cell_count());
  for (Cell c : sub.cells()) CHECK(c.a <= 1);
  for (Vtx v : sub.touched_vertices()) CHECK(!ring_embeds(inst, sub.star_arcs(v)).empty());
}
