#include "core/components.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace ringforge {
namespace {

bool is_lozenge(const Patch& p, int idx) {
  return p.instance().shapes[p.placements()[idx].shape].kind ==
         ShapeKind::lozenge;
}

// 0: {up(a,b), down(a,b)}; 1: {up(a,b), down(a-1,b)}; 2: {up(a,b), down(a,b-1)}
int lozenge_axis(Cell up_cell, Cell down_cell) {
  if (down_cell.a == up_cell.a && down_cell.b == up_cell.b) return 0;
  if (down_cell.a == up_cell.a - 1 && down_cell.b == up_cell.b) return 1;
  return 2;
}

void check_interior_angles(const std::set<Cell>& comp, const Patch& window) {
  std::set<Vtx> verts;
  for (Cell c : comp)
    for (Vtx v : cell_vertices(c)) verts.insert(v);
  for (Vtx v : verts) {
    bool occ[6];
    int count = 0;
    bool window_interior = true;
    for (int k = 0; k < 6; ++k) {
      Cell c = sector_owner(v, k);
      occ[k] = comp.count(c) != 0;
      count += occ[k];
      if (!window.occupied(c)) window_interior = false;
    }
    if (count == 0 || count == 6 || !window_interior) continue;
    // the occupied sectors must form one contiguous run of at most 3 units
    int runs = 0, longest = 0;
    for (int k = 0; k < 6; ++k) {
      if (!occ[k] || occ[(k + 5) % 6]) continue;
      ++runs;
      int len = 0;
      while (len < 6 && occ[(k + len) % 6]) ++len;
      longest = std::max(longest, len);
    }
    if (runs != 1 || longest > 3)
      throw std::logic_error(
          "diamond component interior boundary angle outside {1,2,3} units");
  }
}

}  // namespace

std::vector<DiamondComponent> diamond_components(const Patch& p) {
  const std::vector<Placement>& pls = p.placements();
  std::vector<int> group(pls.size(), -1);
  std::vector<DiamondComponent> out;
  for (size_t i = 0; i < pls.size(); ++i) {
    if (group[i] >= 0 || !is_lozenge(p, (int)i)) continue;
    DiamondComponent comp;
    std::vector<int> stack{(int)i};
    group[i] = (int)out.size();
    while (!stack.empty()) {
      int j = stack.back();
      stack.pop_back();
      comp.placements.push_back(j);
      for (Cell c : placement_cells(p.instance(), pls[j])) {
        comp.cells.push_back(c);
        for (Cell nc : cell_neighbors(c)) {
          int k = p.placement_at(nc);
          if (k < 0 || group[k] >= 0 || !is_lozenge(p, k)) continue;
          group[k] = (int)out.size();
          stack.push_back(k);
        }
      }
    }
    std::sort(comp.placements.begin(), comp.placements.end());
    std::sort(comp.cells.begin(), comp.cells.end());
    out.push_back(std::move(comp));
  }
  return out;
}

ComponentClass classify_component(const DiamondComponent& c,
                                  const Patch& window) {
  const Instance& inst = window.instance();
  std::set<Cell> comp(c.cells.begin(), c.cells.end());
  check_interior_angles(comp, window);

  // one lozenge-grid frame per axis; mixed-axis components have none
  int axis = -1;
  bool mixed = false;
  std::vector<std::pair<Cell, Cell>> pairs;  // (up cell, down cell)
  for (int idx : c.placements) {
    std::vector<Cell> cs = placement_cells(inst, window.placements()[idx]);
    Cell up_cell = cs[0].up ? cs[0] : cs[1];
    Cell down_cell = cs[0].up ? cs[1] : cs[0];
    int a = lozenge_axis(up_cell, down_cell);
    if (axis < 0) axis = a;
    if (a != axis) mixed = true;
    pairs.emplace_back(up_cell, down_cell);
  }
  ComponentClass out;
  if (mixed || pairs.empty()) return out;

  // rotate so every lozenge spans {up(a,b), down(a,b)}: square (a,b)
  Iso g{axis, false, {0, 0}};
  Iso ginv = inverse(g);
  std::set<std::pair<int, int>> squares;
  for (auto& [uc, dc] : pairs) {
    Cell r = apply(g, uc);
    Cell cell_up = r.up ? r : apply(g, dc);
    squares.insert({cell_up.a, cell_up.b});
  }
  auto covered = [&](Cell rotated) {
    return window.occupied(apply(ginv, rotated));
  };

  int amin = squares.begin()->first, amax = amin;
  int bmin = squares.begin()->second, bmax = bmin;
  for (auto& [a, b] : squares) {
    amin = std::min(amin, a);
    amax = std::max(amax, a);
    bmin = std::min(bmin, b);
    bmax = std::max(bmax, b);
  }
  out.cols = amax - amin + 1;
  out.rows = bmax - bmin + 1;
  out.full_rectangle = (int)squares.size() == out.rows * out.cols;
  for (auto& [a, b] : squares) {
    if (!squares.count({a + 1, b}) && !covered(Cell{a + 1, b, true}))
      out.open_east = true;
    if (!squares.count({a - 1, b}) && !covered(Cell{a - 1, b, false}))
      out.open_west = true;
    if (!squares.count({a, b + 1}) && !covered(Cell{a, b + 1, true}))
      out.open_north = true;
    if (!squares.count({a, b - 1}) && !covered(Cell{a, b - 1, false}))
      out.open_south = true;
  }
  bool sealed =
      !out.open_east && !out.open_west && !out.open_north && !out.open_south;
  if (sealed && out.full_rectangle) {
    out.shape = ComponentShape::parallelogram;
    out.m = std::min(out.rows, out.cols);
    out.n = std::max(out.rows, out.cols);
  }
  return out;
}

}  // namespace ringforge
