#include "core/blocks.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

#include "core/enumerate.hpp"

namespace ringforge {
namespace {

constexpr long long kStepBudget = 400000;  // per uniqueness check

const Vtx kDirections[6] = {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};

bool has_lozenge(const Patch& p) {
  for (const Placement& pl : p.placements())
    if (p.instance().shapes[pl.shape].kind == ShapeKind::lozenge) return true;
  return false;
}

std::multiset<std::string> descriptor_set(const Patch& p) {
  std::multiset<std::string> out;
  for (const Placement& pl : p.placements())
    out.insert(placement_descriptor(p.instance(), pl));
  return out;
}

Patch translated(const Patch& p, Vtx t) {
  return transformed(p, Iso{0, false, t});
}

// shift so the smallest cell sits at coordinates (0,0)
Patch normalized(const Patch& p) {
  std::vector<Cell> cs = p.cells();
  if (cs.empty()) return p;
  Cell m = cs.front();
  return translated(p, Vtx{-m.a, -m.b});
}

// linear parts of the patch's own symmetries: point-group elements g such
// that some translate of g·p equals p as a colored object
std::vector<Iso> symmetry_linear_parts(const Patch& p) {
  std::vector<Iso> out;
  const std::multiset<std::string> self = descriptor_set(p);
  const std::vector<Cell> cs = p.cells();
  for (const Iso& g : point_group(!p.instance().orientation_sensitive)) {
    Patch q = transformed(p, g);
    std::vector<Cell> qc = q.cells();
    Cell m0 = cs.front(), m1 = qc.front();
    if (m0.up != m1.up) continue;
    Patch shifted = translated(q, Vtx{m0.a - m1.a, m0.b - m1.b});
    if (descriptor_set(shifted) == self) out.push_back(Iso{g.r, g.m, {0, 0}});
  }
  return out;
}

// connected patches with <= max_cells cells, one representative per
// isometry class, each containing at least one lozenge placement
std::vector<Patch> enumerate_candidates(const Instance& inst, int max_cells) {
  std::vector<Patch> out;
  std::set<std::string> seen;
  std::queue<Patch> todo;
  const Patch empty(inst);
  for (const Placement& pl : placements_covering(inst, Cell{0, 0, true})) {
    std::optional<Patch> p = empty.place(pl);
    if (!p || (int)p->cell_count() > max_cells) continue;
    if (seen.insert(canonical_form(*p)).second) todo.push(*p);
  }
  while (!todo.empty()) {
    Patch p = todo.front();
    todo.pop();
    if (has_lozenge(p)) out.push_back(p);
    if ((int)p.cell_count() >= max_cells) continue;
    for (Cell c : p.cells())
      for (Cell n : cell_neighbors(c)) {
        if (p.occupied(n)) continue;
        for (const Placement& pl : placements_covering(inst, n)) {
          if (p.can_place(pl) != PlaceStatus::ok) continue;
          std::optional<Patch> np = p.place(pl);
          if (!np || (int)np->cell_count() > max_cells) continue;
          if (seen.insert(canonical_form(*np)).second) todo.push(*np);
        }
      }
  }
  return out;
}

// the k-step march B ∪ B+d ∪ ... ∪ B+depth·d closes uniquely at every step
bool marches(const Patch& block, Vtx d, int depth) {
  const Instance& inst = block.instance();
  Patch work = block;
  std::set<std::string> have;
  for (const Placement& pl : block.placements())
    have.insert(placement_descriptor(inst, pl));
  for (int k = 1; k <= depth; ++k) {
    for (const Placement& pl : block.placements()) {
      Placement t = transformed(pl, Iso{0, false, {k * d.x, k * d.y}});
      if (!have.insert(placement_descriptor(inst, t)).second) continue;
      if (work.place_mut(t) != PlaceStatus::ok) return false;
    }
    CompletionConstraints cons;
    for (const Placement& pl : work.placements())
      if (inst.shapes[pl.shape].kind == ShapeKind::lozenge)
        for (Cell c : placement_cells(inst, pl)) cons.frozen.push_back(c);
    EnumOptions opt;
    opt.max_classes = 2;
    opt.max_steps = kStepBudget;
    EnumResult r =
        enumerate_completions(work, cell_ball(work.cells(), 2), cons, opt);
    if (r.partial || r.classes.size() != 1) return false;
  }
  return true;
}

}  // namespace

std::vector<ForwardBlock> find_forward_analytic_blocks(const Instance& inst,
                                                       int max_cells,
                                                       int depth) {
  if (depth < 1)
    throw std::invalid_argument(
        "forward-analytic search needs depth >= 1: at depth 0 every patch "
        "qualifies vacuously");
  std::vector<std::pair<std::string, Patch>> cands;
  for (Patch& p : enumerate_candidates(inst, max_cells))
    cands.emplace_back(canonical_form(p), std::move(p));
  std::stable_sort(cands.begin(), cands.end(),
                   [](const auto& a, const auto& b) {
                     if (a.second.cell_count() != b.second.cell_count())
                       return a.second.cell_count() < b.second.cell_count();
                     return a.first < b.first;
                   });
  std::vector<ForwardBlock> out;
  for (const auto& [key, cand] : cands) {
    std::vector<Iso> sym = symmetry_linear_parts(cand);
    std::vector<Vtx> taken;
    for (const Vtx& d : kDirections) {
      bool dup = false;
      for (const Iso& g : sym)
        for (const Vtx& e : taken)
          if (apply_linear(g, d) == e) dup = true;
      if (dup) continue;
      if (!marches(cand, d, depth)) continue;
      taken.push_back(d);
      out.push_back(ForwardBlock{normalized(cand), d});
    }
  }
  return out;
}

}  // namespace ringforge
