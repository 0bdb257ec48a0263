#include <doctest.h>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "core/blocks.hpp"
#include "core/enumerate.hpp"
#include "core/instance.hpp"
#include "core/patch.hpp"

using namespace ringforge;

namespace {

Instance& v1b() {
  static Instance inst =
      load_instance(std::string(RINGFORGE_DATA_DIR) + "/autf2.ring");
  return inst;
}

Patch fixture_block() {
  std::ifstream in(std::string(RINGFORGE_DATA_DIR) + "/forward_block.patch");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_patch(v1b(), ss.str());
}

// the horizontal lozenge row used as the march seed in several checks
Patch lozenge_row(int n) {
  const Instance& inst = v1b();
  std::string text;
  for (int a = 0; a < n; ++a)
    text += "piece loz at " + std::to_string(a) + ",0,up rot=0\n";
  return parse_patch(inst, text);
}

}  // namespace

TEST_CASE("the minimal forward-analytic block is a single lozenge") {
  auto blocks = find_forward_analytic_blocks(v1b(), 2, 3);
  REQUIRE(blocks.size() == 1);
  CHECK(blocks[0].block.cell_count() == 2);
  CHECK(blocks[0].direction == Vtx{1, 0});
  CHECK(canonical_form(blocks[0].block) == canonical_form(fixture_block()));
}

TEST_CASE("the minimal block's march closes uniquely for six steps") {
  auto blocks = find_forward_analytic_blocks(v1b(), 2, 6);
  REQUIRE(blocks.size() == 1);
  CHECK(canonical_form(blocks[0].block) == canonical_form(fixture_block()));
}

TEST_CASE("blocks are reported smallest first with symmetry-reduced directions") {
  // at a four-cell budget the census is: the single lozenge, the 1x2 lozenge
  // row, and one lozenge-with-two-triangles germ whose isolated-lozenge march
  // works along both antidiagonal directions (the germ has no symmetry
  // identifying them)
  auto blocks = find_forward_analytic_blocks(v1b(), 4, 3);
  REQUIRE(blocks.size() == 4);
  CHECK(blocks[0].block.cell_count() == 2);
  CHECK(blocks[0].direction == Vtx{1, 0});
  CHECK(canonical_form(blocks[0].block) == canonical_form(fixture_block()));
  CHECK(blocks[1].block.cell_count() == 4);
  CHECK(blocks[1].direction == Vtx{1, 0});
  CHECK(blocks[2].block.cell_count() == 4);
  CHECK(blocks[2].direction == Vtx{-1, 1});
  CHECK(blocks[3].block.cell_count() == 4);
  CHECK(blocks[3].direction == Vtx{1, -1});
  CHECK(canonical_form(blocks[2].block) == canonical_form(blocks[3].block));
}

TEST_CASE("depth zero is rejected") {
  CHECK_THROWS_AS(find_forward_analytic_blocks(v1b(), 2, 0),
                  std::invalid_argument);
}

TEST_CASE("an all-lozenge instance admits no maximal-component march") {
  // with a single grid ring and only lozenges, every completion must glue
  // more lozenges onto any lozenge row, so the maximal-component hypothesis
  // behind forward analyticity is never satisfiable and the search is empty
  Instance toy = parse_instance(
      "color amber\n"
      "shape loz kind=lozenge corners=amber:1,amber:2,amber:1,amber:2\n"
      "ring grid word=amber:1,amber:2,amber:1,amber:2\n"
      "option orientation_sensitive=false\n");
  CHECK(find_forward_analytic_blocks(toy, 2, 1).empty());
}

TEST_CASE("a cut march fragment forces upward, not across the cut") {
  // cutting the unique march collar behind a seam leaves every seam vertex
  // at exactly the ambiguity threshold, so propagation never re-derives the
  // next step eastward; what it does force is the start of the next strip
  // level above the fragment
  const Instance& inst = v1b();
  Patch row = lozenge_row(4);
  CompletionConstraints cons;
  cons.frozen = row.cells();
  EnumResult r = enumerate_completions(row, cell_ball(row.cells(), 2), cons, {});
  REQUIRE(r.classes.size() == 1);
  REQUIRE(!r.partial);
  const Patch& full = r.completions[0];

  const int cut = 2;
  std::vector<Cell> keep;
  for (Cell c : cell_ball(row.cells(), 3))
    if (c.a <= cut) keep.push_back(c);
  Patch west = restricted_to(full, keep);
  REQUIRE(west.placements().size() > 0);

  ForcedResult fr = forced_moves(west);
  CHECK(!fr.contradiction);
  CHECK(fr.moves.size() > 0);
  for (const Placement& m : fr.moves)
    for (Cell c : placement_cells(inst, m)) CHECK(c.a <= cut);
}
