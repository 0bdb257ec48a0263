#pragma once
// Forward-analytic blocks: finite patches whose periodic continuation in one
// lattice direction has a uniquely determined collar.
//
// A block B qualifies for a unit cell-translation d when, for every
// k = 1..depth, the union  B ∪ B+d ∪ ... ∪ B+k·d  (translates must agree as
// colored objects wherever they overlap) completes in exactly one way on the
// radius-2 cell ball around it, under the side condition that the union's
// lozenge placements form a maximal diamond component (frozen).  That side
// condition is essential: a bare block never pins its continuation, because
// finite windows always admit completions that thicken the diamond component,
// so forward analyticity is a statement about maximal components.
//
// Blocks must contain at least one lozenge placement.  Results are
// deduplicated up to isometry and reported smallest first, each with one
// representative qualifying direction per orbit of the block's own symmetry
// group.  A budget-truncated uniqueness check disqualifies the candidate, so
// everything reported has a completed certificate behind it.

#include <vector>

#include "core/patch.hpp"

namespace ringforge {

struct ForwardBlock {
  Patch block;    // translation-normalized representative
  Vtx direction;  // cell translation (da, db), one of the six lattice units
};

// All qualifying blocks with at most max_cells cells (up to isometry),
// smallest first.  depth must be at least 1 (depth 0 would qualify
// everything vacuously); throws std::invalid_argument otherwise.
std::vector<ForwardBlock> find_forward_analytic_blocks(const Instance& inst,
                                                       int max_cells,
                                                       int depth);

}  // namespace ringforge
