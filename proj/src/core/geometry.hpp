#pragma once
// Triangular lattice: vertex (x,y) sits at x*u + y*v with u=(1,0), v=(1/2, sqrt3/2).
// Cells are unit triangles: up(a,b) has vertices (a,b),(a+1,b),(a,b+1);
// down(a,b) has (a+1,b),(a,b+1),(a+1,b+1).
// Around each vertex six 60-degree sectors, counterclockwise, sector 0 between
// directions +u and +v.  All angles are counted in units of pi/3.

#include <array>
#include <cstdint>
#include <compare>
#include <cstdlib>
#include <functional>
#include <queue>
#include <set>
#include <vector>

namespace ringforge {

struct Vtx {
  int x = 0, y = 0;
  auto operator<=>(const Vtx&) const = default;
};

struct Cell {
  int a = 0, b = 0;
  bool up = true;
  auto operator<=>(const Cell&) const = default;
};

inline Vtx operator+(Vtx p, Vtx q) { return {p.x + q.x, p.y + q.y}; }
inline Vtx operator-(Vtx p, Vtx q) { return {p.x - q.x, p.y - q.y}; }

// graph distance on the edge lattice (hex metric)
inline int vtx_dist(Vtx p, Vtx q) {
  int dx = p.x - q.x, dy = p.y - q.y;
  if ((dx >= 0) == (dy >= 0)) return std::abs(dx + dy);
  return std::max(std::abs(dx), std::abs(dy));
}

inline std::array<Vtx, 3> cell_vertices(Cell c) {
  if (c.up) return {Vtx{c.a, c.b}, Vtx{c.a + 1, c.b}, Vtx{c.a, c.b + 1}};
  return {Vtx{c.a + 1, c.b}, Vtx{c.a, c.b + 1}, Vtx{c.a + 1, c.b + 1}};
}

// which cell owns sector k of vertex v
inline Cell sector_owner(Vtx v, int k) {
  switch (((k % 6) + 6) % 6) {
    case 0: return {v.x, v.y, true};
    case 1: return {v.x - 1, v.y, false};
    case 2: return {v.x - 1, v.y, true};
    case 3: return {v.x - 1, v.y - 1, false};
    case 4: return {v.x, v.y - 1, true};
    default: return {v.x, v.y - 1, false};
  }
}

// the three (vertex, sector) slots a cell covers, in ccw vertex order
struct CellSlot {
  Vtx v;
  int sector;
};
inline std::array<CellSlot, 3> cell_slots(Cell c) {
  if (c.up)
    return {CellSlot{{c.a, c.b}, 0}, CellSlot{{c.a + 1, c.b}, 2},
            CellSlot{{c.a, c.b + 1}, 4}};
  return {CellSlot{{c.a + 1, c.b}, 1}, CellSlot{{c.a, c.b + 1}, 5},
          CellSlot{{c.a + 1, c.b + 1}, 3}};
}

// edge-sharing neighbours
inline std::array<Cell, 3> cell_neighbors(Cell c) {
  if (c.up)
    return {Cell{c.a, c.b, false}, Cell{c.a - 1, c.b, false},
            Cell{c.a, c.b - 1, false}};
  return {Cell{c.a, c.b, true}, Cell{c.a + 1, c.b, true},
          Cell{c.a, c.b + 1, true}};
}

// ---- isometries: v -> rot60^r (mirror^m (v)) + t -------------------------
// rot60: (x,y)->(-y,x+y); mirror: (x,y)->(x+y,-y)  (fixes direction +u)

struct Iso {
  int r = 0;        // 0..5
  bool m = false;   // mirror first
  Vtx t{};
  auto operator<=>(const Iso&) const = default;
};

inline Vtx apply_linear(const Iso& g, Vtx p) {
  if (g.m) p = {p.x + p.y, -p.y};
  for (int i = 0; i < g.r; ++i) p = {-p.y, p.x + p.y};
  return p;
}
inline Vtx apply(const Iso& g, Vtx p) { return apply_linear(g, p) + g.t; }

inline int apply_sector(const Iso& g, int k) {
  int s = g.m ? (5 - k) : k;
  return ((s + g.r) % 6 + 6) % 6;
}

inline Cell apply(const Iso& g, Cell c) {
  if (g.m) c = c.up ? Cell{c.a + c.b, -c.b - 1, false}
                    : Cell{c.a + c.b + 1, -c.b - 1, true};
  for (int i = 0; i < g.r; ++i)
    c = c.up ? Cell{-c.b - 1, c.a + c.b, false}
             : Cell{-c.b - 1, c.a + c.b + 1, true};
  c.a += g.t.x;
  c.b += g.t.y;
  return c;
}

inline Iso compose(const Iso& g1, const Iso& g2) {
  // h(v) = g1(g2(v)); mirror * rot^r = rot^-r * mirror
  Iso h;
  h.m = g1.m != g2.m;
  int r2 = g1.m ? (6 - g2.r) % 6 : g2.r;
  h.r = (g1.r + r2) % 6;
  Iso lin{g1.r, g1.m, {0, 0}};
  h.t = apply_linear(lin, g2.t) + g1.t;
  return h;
}

inline Iso inverse(const Iso& g) {
  Iso inv;
  inv.m = g.m;
  inv.r = g.m ? g.r : (6 - g.r) % 6;
  Vtx it = apply_linear(Iso{inv.r, inv.m, {0, 0}}, g.t);
  inv.t = {-it.x, -it.y};
  return inv;
}

// the 12 point-group elements (6 when reflections are excluded)
inline std::vector<Iso> point_group(bool with_reflections = true) {
  std::vector<Iso> gs;
  for (int m = 0; m < (with_reflections ? 2 : 1); ++m)
    for (int r = 0; r < 6; ++r) gs.push_back(Iso{r, m != 0, {0, 0}});
  return gs;
}

// cells within cell-graph distance rad of the six cells around v
inline std::vector<Cell> vertex_ball(Vtx v, int rad) {
  std::set<Cell> seen;
  std::queue<std::pair<Cell, int>> q;
  for (int k = 0; k < 6; ++k) {
    Cell c = sector_owner(v, k);
    if (seen.insert(c).second) q.push({c, 0});
  }
  while (!q.empty()) {
    auto [c, d] = q.front();
    q.pop();
    if (d == rad) continue;
    for (Cell n : cell_neighbors(c))
      if (seen.insert(n).second) q.push({n, d + 1});
  }
  return {seen.begin(), seen.end()};
}

// cells within cell-graph distance rad of a given cell set
inline std::vector<Cell> cell_ball(const std::vector<Cell>& base, int rad) {
  std::set<Cell> seen(base.begin(), base.end());
  std::queue<std::pair<Cell, int>> q;
  for (Cell c : base) q.push({c, 0});
  while (!q.empty()) {
    auto [c, d] = q.front();
    q.pop();
    if (d == rad) continue;
    for (Cell n : cell_neighbors(c))
      if (seen.insert(n).second) q.push({n, d + 1});
  }
  return {seen.begin(), seen.end()};
}

}  // namespace ringforge

template <>
struct std::hash<ringforge::Vtx> {
  size_t operator()(const ringforge::Vtx& v) const {
    return std::hash<long long>()((long long)v.x * 1000003LL + v.y);
  }
};
template <>
struct std::hash<ringforge::Cell> {
  size_t operator()(const ringforge::Cell& c) const {
    return std::hash<long long>()(((long long)c.a * 1000003LL + c.b) * 2 +
                                  (c.up ? 1 : 0));
  }
};
