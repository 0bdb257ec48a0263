#pragma once
// Finite patches of placed pieces on the triangular lattice.  A placement is
// a shape plus a lattice isometry applied to the shape's reference pose.
// Vertex stars track which placement corner covers each of the six sectors;
// legality of a star means the JOINT arrangement of its corner arcs embeds
// into some ring of the instance.

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "core/geometry.hpp"
#include "core/instance.hpp"

namespace ringforge {

struct Placement {
  int shape = 0;
  Iso iso;
  auto operator<=>(const Placement&) const = default;
};

struct CornerSlot {
  Vtx v;
  int start = 0;  // first sector
  int len = 1;
  Arc arc;
  int corner = 0;
};

std::vector<Cell> placement_cells(const Instance&, const Placement&);
std::vector<CornerSlot> placement_corners(const Instance&, const Placement&);
inline Placement transformed(const Placement& p, const Iso& g) {
  return {p.shape, compose(g, p.iso)};
}
// colored-object encoding: placements that color the lattice identically
// (e.g. differing by a symmetry of the shape's coloring) encode equally
std::string placement_descriptor(const Instance&, const Placement&);

// all placements of any shape covering the given cell, deduplicated as
// colored objects
std::vector<Placement> placements_covering(const Instance&, Cell);

enum class PlaceStatus { ok, overlap, illegal_vertex, bad_shape };

class Patch {
 public:
  explicit Patch(const Instance& inst) : inst_(&inst) {}

  const Instance& instance() const { return *inst_; }
  const std::vector<Placement>& placements() const { return pls_; }
  bool occupied(Cell c) const { return cells_.count(c) != 0; }
  int placement_at(Cell c) const {
    auto it = cells_.find(c);
    return it == cells_.end() ? -1 : it->second;
  }
  size_t cell_count() const { return cells_.size(); }
  std::vector<Cell> cells() const;

  // pure interface: place returns the extended patch or the failure status
  std::optional<Patch> place(const Placement& p) const;
  PlaceStatus can_place(const Placement& p) const;

  // mutating core used by searches; unplace_last undoes the latest place_mut
  PlaceStatus place_mut(const Placement& p);
  void unplace_last();

  // star of v as a partial cyclic arrangement (one entry per placed corner)
  std::vector<PlacedArc> star_arcs(Vtx v) const;
  int star_units(Vtx v) const;            // occupied sectors
  int longest_run(Vtx v) const;           // longest contiguous occupied arc
  bool vertex_known(Vtx v) const { return stars_.count(v) != 0; }
  std::vector<Vtx> touched_vertices() const;
  // sector occupancy: placement index or -1
  int sector_placement(Vtx v, int k) const;
  int sector_corner(Vtx v, int k) const;

 private:
  struct Star {
    std::array<int, 6> pl{{-1, -1, -1, -1, -1, -1}};
    std::array<int8_t, 6> corner{{-1, -1, -1, -1, -1, -1}};
    int units = 0;
  };
  const Instance* inst_;
  std::vector<Placement> pls_;
  std::unordered_map<Cell, int> cells_;
  std::unordered_map<Vtx, Star> stars_;

  PlaceStatus try_fill(const Placement& p);
  void remove_placement(int idx);
};

// translation- and point-group-invariant encoding (mirrors included unless
// the instance is orientation-sensitive)
std::string canonical_form(const Patch&);
// encoding of the patch as laid out (translation-normalized only)
std::string oriented_form(const Patch&);

Patch parse_patch(const Instance&, const std::string& text);
std::string patch_to_string(const Patch&);

// keep only placements all of whose cells lie in `keep`
Patch restricted_to(const Patch&, const std::vector<Cell>& keep);
Patch transformed(const Patch&, const Iso& g);

}  // namespace ringforge
