#pragma once
// Exhaustive completion search: all ways to cover a target cell set, every
// interior vertex closing into an exact ring, counted up to lattice isometry.
// Lozenges may stick one cell out of the target; class identity is taken on
// the patch restricted to fully-inside placements, so boundary overhang never
// splits classes.

#include <vector>

#include "core/patch.hpp"

namespace ringforge {

// Side conditions for certificates about specific diamond components.
// Lozenge-lozenge edge adjacency across the frozen boundary is forbidden
// except at exempt cells, so a frozen component stays exactly as seeded
// (exempt cells mark open ends that may keep growing).
struct CompletionConstraints {
  std::vector<Cell> frozen;
  std::vector<Cell> exempt;
  int max_component_lozenges = 0;  // 0 = unbounded
};

struct EnumOptions {
  int max_classes = 0;       // stop after this many classes (0 = all)
  long long max_steps = 0;   // search-node budget (0 = unbounded)
  bool use_forced = true;    // forced-move propagation
};

struct EnumResult {
  std::vector<Patch> classes;      // target-restricted representative per class
  std::vector<Patch> completions;  // matching full completion (with overhang)
  bool partial = false;            // a cap or budget truncated the search
  long long steps = 0;
};

EnumResult enumerate_completions(const Patch& seed, const std::vector<Cell>& target,
                                 const CompletionConstraints& cons = {},
                                 const EnumOptions& opt = {});

// target = every cell within cell-graph distance `radius` of the seed's cells
EnumResult enumerate_radius(const Patch& seed, int radius,
                            const CompletionConstraints& cons = {},
                            const EnumOptions& opt = {});

// Placements that are the unique legal colored continuation covering some
// uncovered target cell right now.  Sound: every completion of the target
// contains every such placement.
struct ForcedResult {
  std::vector<Placement> moves;
  bool contradiction = false;  // some uncovered target cell has no candidate
};

ForcedResult forced_moves(const Patch&, const std::vector<Cell>& target,
                          const CompletionConstraints& cons = {});

// Arc-threshold propagation: at every vertex whose longest occupied
// contiguous arc exceeds theta0 the ring is uniquely determined; corner arcs
// of that completion realizable by exactly one placement are emitted.
// Iterated to a fixed point.  A vertex over the threshold with no ring
// completion (or a forced arc with no legal realization) flags contradiction.
ForcedResult forced_moves(const Patch&);

// All legal candidate placements covering `cell` under the constraints.
std::vector<Placement> candidate_placements(Patch& scratch, Cell cell,
                                            const std::vector<Cell>& target,
                                            const CompletionConstraints& cons);

}  // namespace ringforge
