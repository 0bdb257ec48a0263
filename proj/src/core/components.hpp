#pragma once
// Diamond components: maximal edge-connected sets of lozenge placements, and
// their shape classification inside a finite window.
//
// A component fully interior to the window (every neighbouring cell covered)
// is a convex lozenge-tiled region; in a legal patch its interior boundary
// angles are always 1, 2 or 3 units of pi/3, and a complete component is an
// m-by-n parallelogram.  A component whose boundary leaves the covered region
// cannot be classified from the window alone and is reported undetermined,
// together with its visible footprint (bounding box in lozenge-grid
// coordinates and which sides are sealed by covered cells) — the window
// classifier upstream turns that profile into class constraints.

#include <vector>

#include "core/patch.hpp"

namespace ringforge {

struct DiamondComponent {
  std::vector<int> placements;  // indices into patch.placements()
  std::vector<Cell> cells;      // sorted cell union
};

// maximal edge-connected groups of lozenge placements (shared corners do not
// connect), in first-placement order
std::vector<DiamondComponent> diamond_components(const Patch&);

enum class ComponentShape {
  parallelogram,
  sector,
  strip,
  halfplane,
  plane,
  finite_window_undetermined,
};

struct ComponentClass {
  ComponentShape shape = ComponentShape::finite_window_undetermined;
  int m = 0, n = 0;  // parallelogram sides, m <= n
  // visible footprint in the component's own lozenge-grid frame
  int rows = 0, cols = 0;   // bounding box (0,0 when the frame is undefined)
  bool full_rectangle = false;  // visible cells fill the bounding box
  bool open_west = false, open_east = false;   // column direction
  bool open_south = false, open_north = false;  // row direction
};

// Shape of one component of `window`.  Throws std::logic_error when an
// interior boundary angle leaves {1,2,3} units (unreachable from legal
// construction; kept as an internal consistency check).
ComponentClass classify_component(const DiamondComponent&, const Patch& window);

}  // namespace ringforge
