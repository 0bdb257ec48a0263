#include "core/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace ringforge {

namespace {

bool is_lozenge(const Instance& inst, int shape) {
  return inst.shapes.at(shape).kind == ShapeKind::lozenge;
}

struct Searcher {
  const Instance& inst;
  Patch patch;
  std::vector<Cell> target;
  std::set<Cell> target_set;
  std::set<Cell> frozen, exempt;
  int comp_cap;
  EnumOptions opt;

  std::set<std::string> seen;
  EnumResult out;
  bool stopped = false;
  std::unordered_map<Cell, std::vector<Placement>> cand_cache;

  Searcher(const Patch& seed, const std::vector<Cell>& tgt, const CompletionConstraints& cons,
           const EnumOptions& o)
      : inst(seed.instance()),
        patch(seed),
        target(tgt),
        target_set(tgt.begin(), tgt.end()),
        frozen(cons.frozen.begin(), cons.frozen.end()),
        exempt(cons.exempt.begin(), cons.exempt.end()),
        comp_cap(cons.max_component_lozenges),
        opt(o) {
    std::sort(target.begin(), target.end());
  }

  bool frozen_boundary_ok(const Placement& p) const {
    if (!is_lozenge(inst, p.shape)) return true;
    for (Cell c : placement_cells(inst, p)) {
      if (exempt.count(c)) continue;  // an open end may grow
      for (Cell n : cell_neighbors(c)) {
        int idx = patch.placement_at(n);
        if (idx < 0 || !is_lozenge(inst, patch.placements()[idx].shape)) continue;
        if (frozen.count(n) && !exempt.count(n)) return false;
      }
    }
    return true;
  }

  bool component_cap_ok(int new_idx) {
    if (comp_cap <= 0) return true;
    std::unordered_set<int> comp{new_idx};
    std::vector<int> stack{new_idx};
    while (!stack.empty()) {
      int idx = stack.back();
      stack.pop_back();
      if (static_cast<int>(comp.size()) > comp_cap) return false;
      for (Cell c : placement_cells(inst, patch.placements()[idx]))
        for (Cell n : cell_neighbors(c)) {
          int j = patch.placement_at(n);
          if (j >= 0 && j != idx && is_lozenge(inst, patch.placements()[j].shape) &&
              comp.insert(j).second)
            stack.push_back(j);
        }
    }
    return static_cast<int>(comp.size()) <= comp_cap;
  }

  // a successful trial placement is rolled back before returning
  bool trial_ok(const Placement& p) {
    if (!frozen_boundary_ok(p)) return false;
    if (patch.place_mut(p) != PlaceStatus::ok) return false;
    bool ok = component_cap_ok(static_cast<int>(patch.placements().size()) - 1);
    patch.unplace_last();
    return ok;
  }

  std::vector<Placement> compute_candidates(Cell cell) {
    std::vector<Placement> out_c;
    for (const Placement& p : placements_covering(inst, cell)) {
      int outside = 0;
      for (Cell c : placement_cells(inst, p))
        if (!target_set.count(c)) ++outside;
      bool loz = is_lozenge(inst, p.shape);
      if (outside > (loz ? 1 : 0)) continue;
      if (trial_ok(p)) out_c.push_back(p);
    }
    return out_c;
  }

  std::vector<Placement> candidates_for(Cell cell) {
    // the component cap depends on global component structure, which local
    // invalidation does not track; skip the cache in that mode
    if (comp_cap > 0) return compute_candidates(cell);
    auto it = cand_cache.find(cell);
    if (it != cand_cache.end()) return it->second;
    return cand_cache.emplace(cell, compute_candidates(cell)).first->second;
  }

  void invalidate_around(const Placement& p) {
    // a placement changes candidate sets exactly at cells sharing a vertex
    std::set<Vtx> vts;
    for (Cell c : placement_cells(inst, p))
      for (Vtx v : cell_vertices(c)) vts.insert(v);
    for (Vtx v : vts)
      for (int k = 0; k < 6; ++k) cand_cache.erase(sector_owner(v, k));
  }

  PlaceStatus place_tracked(const Placement& p) {
    PlaceStatus st = patch.place_mut(p);
    if (st == PlaceStatus::ok) {
      if (comp_cap > 0 && !component_cap_ok(static_cast<int>(patch.placements().size()) - 1)) {
        patch.unplace_last();
        return PlaceStatus::illegal_vertex;
      }
      invalidate_around(p);
    }
    return st;
  }

  void unplace_tracked() {
    Placement p = patch.placements().back();
    patch.unplace_last();
    invalidate_around(p);
  }

  std::vector<Cell> uncovered() const {
    std::vector<Cell> out_v;
    for (Cell c : target)
      if (!patch.occupied(c)) out_v.push_back(c);
    return out_v;
  }

  // applies forced placements to fixpoint; returns number applied, or -1 on
  // contradiction (an uncoverable cell, or incompatible forced placements)
  int apply_forced_fixpoint() {
    int applied = 0;
    bool progress = true;
    while (progress) {
      progress = false;
      for (Cell c : uncovered()) {
        if (patch.occupied(c)) continue;  // covered earlier in this pass
        auto cands = candidates_for(c);
        if (cands.empty()) {
          undo(applied);
          return -1;
        }
        if (cands.size() != 1) continue;
        PlaceStatus st = place_tracked(cands[0]);
        if (st != PlaceStatus::ok) {
          undo(applied);
          return -1;
        }
        ++applied;
        progress = true;
      }
    }
    return applied;
  }

  void undo(int n) {
    for (int i = 0; i < n; ++i) unplace_tracked();
  }

  void record_completion() {
    Patch trimmed = restricted_to(patch, target);
    std::string canon = canonical_form(trimmed);
    if (seen.insert(canon).second) {
      out.classes.push_back(std::move(trimmed));
      out.completions.push_back(patch);
      if (opt.max_classes > 0 && static_cast<int>(out.classes.size()) >= opt.max_classes) {
        out.partial = true;
        stopped = true;
      }
    }
  }

  void dfs() {
    ++out.steps;
    if (opt.max_steps > 0 && out.steps > opt.max_steps) {
      out.partial = true;
      stopped = true;
      return;
    }
    int applied = 0;
    if (opt.use_forced) {
      applied = apply_forced_fixpoint();
      if (applied < 0) return;
    }
    Cell best{0, 0, true};
    size_t best_n = 0;
    bool have_best = false, complete = true;
    for (Cell c : uncovered()) {
      complete = false;
      size_t n = candidates_for(c).size();
      if (!have_best || n < best_n) {
        best = c;
        best_n = n;
        have_best = true;
        if (n == 0) break;
      }
    }
    if (complete) {
      record_completion();
      undo(applied);
      return;
    }
    if (best_n > 0) {
      std::vector<Placement> cands = candidates_for(best);
      for (const Placement& p : cands) {
        if (place_tracked(p) == PlaceStatus::ok) {
          dfs();
          unplace_tracked();
        }
        if (stopped) break;
      }
    }
    undo(applied);
  }
};

}  // namespace

std::vector<Placement> candidate_placements(Patch& scratch, Cell cell,
                                            const std::vector<Cell>& target,
                                            const CompletionConstraints& cons) {
  Searcher s(scratch, target, cons, {});
  return s.compute_candidates(cell);
}

ForcedResult forced_moves(const Patch& patch, const std::vector<Cell>& target,
                          const CompletionConstraints& cons) {
  Searcher s(patch, target, cons, {});
  ForcedResult fr;
  std::set<std::string> descs;
  for (Cell c : s.uncovered()) {
    auto cands = s.compute_candidates(c);
    if (cands.empty()) {
      fr.contradiction = true;
      return fr;
    }
    if (cands.size() == 1 &&
        descs.insert(placement_descriptor(patch.instance(), cands[0])).second)
      fr.moves.push_back(cands[0]);
  }
  return fr;
}

ForcedResult forced_moves(const Patch& patch) {
  const Instance& inst = patch.instance();
  const int theta0 = compute_theta0(inst);
  ForcedResult fr;
  Patch work = patch;
  std::set<std::string> emitted;
  bool progress = true;
  while (progress && !fr.contradiction) {
    progress = false;
    for (Vtx v : work.touched_vertices()) {
      int units = work.star_units(v);
      if (units == 6 || work.longest_run(v) <= theta0) continue;
      auto poses = ring_embeds(inst, work.star_arcs(v));
      if (poses.empty()) {
        fr.contradiction = true;
        break;
      }
      // the ring completion: colors and arc boundaries on the open sectors
      bool unique = true;
      for (size_t i = 1; i + 0 < poses.size() && unique; ++i)
        for (int k = 0; k < 6; ++k) {
          if (work.sector_placement(v, k) >= 0) continue;
          if (poses[i].color[k] != poses[0].color[k] ||
              poses[i].arc_begin[k] != poses[0].arc_begin[k])
            unique = false;
        }
      if (!unique) continue;
      const RingPose& pose = poses[0];
      for (int k = 0; k < 6 && !fr.contradiction; ++k) {
        if (work.sector_placement(v, k) >= 0 || !pose.arc_begin[k]) continue;
        int len = 1;
        while (len < 6) {
          int nxt = (k + len) % 6;
          if (work.sector_placement(v, nxt) >= 0 || pose.arc_begin[nxt]) break;
          ++len;
        }
        Arc arc{pose.color[k], len};
        // placements realizing exactly this corner arc at v
        std::vector<Placement> cands;
        for (const Placement& pl : placements_covering(inst, sector_owner(v, k))) {
          bool matches = false;
          for (const CornerSlot& cs : placement_corners(inst, pl))
            if (cs.v == v && cs.start == k && cs.len == len && cs.arc == arc)
              matches = true;
          if (matches && work.can_place(pl) == PlaceStatus::ok)
            cands.push_back(pl);
        }
        if (cands.empty()) {
          fr.contradiction = true;  // forced arc with no legal realization
        } else if (cands.size() == 1) {
          if (emitted.insert(placement_descriptor(inst, cands[0])).second) {
            if (work.place_mut(cands[0]) != PlaceStatus::ok) {
              fr.contradiction = true;
            } else {
              fr.moves.push_back(cands[0]);
              progress = true;
            }
          }
        }
      }
      if (progress) break;  // stars changed; rescan from a fresh vertex list
    }
  }
  return fr;
}

EnumResult enumerate_completions(const Patch& seed, const std::vector<Cell>& target,
                                 const CompletionConstraints& cons, const EnumOptions& opt) {
  Searcher s(seed, target, cons, opt);
  s.dfs();
  return std::move(s.out);
}

EnumResult enumerate_radius(const Patch& seed, int radius, const CompletionConstraints& cons,
                            const EnumOptions& opt) {
  return enumerate_completions(seed, cell_ball(seed.cells(), radius), cons, opt);
}

}  // namespace ringforge
