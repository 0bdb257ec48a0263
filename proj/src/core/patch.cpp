#include "core/patch.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ringforge {

namespace {

struct RefCorner {
  Cell owner;  // cell owning the first sector (unused, kept for clarity)
  Vtx v;
  int start;
  int len;
};

// reference poses: the anchor cell is up(0,0); lozenge adds down(0,0)
std::vector<RefCorner> reference_corners(const Shape& sh) {
  auto lens = [&](size_t i) { return sh.corners[i].len; };
  if (sh.kind == ShapeKind::triangle) {
    for (size_t i = 0; i < 3; ++i)
      if (lens(i) != 1) throw std::invalid_argument("triangle corner angles must be pi/3");
    return {{{0, 0, true}, {0, 0}, 0, 1},
            {{0, 0, true}, {1, 0}, 2, 1},
            {{0, 0, true}, {0, 1}, 4, 1}};
  }
  // lozenge: acute corners at (0,0) and (1,1), obtuse at (1,0) and (0,1)
  std::vector<RefCorner> acute_first = {{{0, 0, true}, {0, 0}, 0, 1},
                                        {{0, 0, false}, {1, 0}, 1, 2},
                                        {{0, 0, false}, {1, 1}, 3, 1},
                                        {{0, 0, true}, {0, 1}, 4, 2}};
  bool p1212 = lens(0) == 1 && lens(1) == 2 && lens(2) == 1 && lens(3) == 2;
  bool p2121 = lens(0) == 2 && lens(1) == 1 && lens(2) == 2 && lens(3) == 1;
  if (!p1212 && !p2121) throw std::invalid_argument("lozenge corner angles must alternate pi/3, 2pi/3");
  std::vector<RefCorner> out;
  for (size_t i = 0; i < 4; ++i) out.push_back(acute_first[(i + (p2121 ? 1 : 0)) % 4]);
  return out;
}

std::vector<Cell> reference_cells(const Shape& sh) {
  if (sh.kind == ShapeKind::triangle) return {{0, 0, true}};
  return {{0, 0, true}, {0, 0, false}};
}

int corner_image_start(const Iso& g, int start, int len) {
  int s = g.m ? (5 - (start + len - 1) + g.r) : (start + g.r);
  return ((s % 6) + 6) % 6;
}

}  // namespace

std::vector<Cell> placement_cells(const Instance& inst, const Placement& p) {
  std::vector<Cell> out;
  for (Cell c : reference_cells(inst.shapes.at(p.shape))) out.push_back(apply(p.iso, c));
  return out;
}

std::vector<CornerSlot> placement_corners(const Instance& inst, const Placement& p) {
  const Shape& sh = inst.shapes.at(p.shape);
  auto refs = reference_corners(sh);
  std::vector<CornerSlot> out;
  for (size_t i = 0; i < refs.size(); ++i) {
    CornerSlot cs;
    cs.v = apply(p.iso, refs[i].v);
    cs.len = refs[i].len;
    cs.start = corner_image_start(p.iso, refs[i].start, refs[i].len);
    cs.arc = sh.corners[i];
    cs.corner = static_cast<int>(i);
    out.push_back(cs);
  }
  return out;
}

std::string placement_descriptor(const Instance& inst, const Placement& p) {
  std::ostringstream os;
  auto cells = placement_cells(inst, p);
  std::sort(cells.begin(), cells.end());
  os << (inst.shapes.at(p.shape).kind == ShapeKind::triangle ? "T" : "L");
  for (Cell c : cells) os << " " << c.a << "," << c.b << "," << (c.up ? "u" : "d");
  std::vector<std::array<int, 5>> recs;
  for (const CornerSlot& cs : placement_corners(inst, p))
    recs.push_back({cs.v.x, cs.v.y, cs.start, cs.len, cs.arc.color});
  std::sort(recs.begin(), recs.end());
  for (auto& r : recs) os << " |" << r[0] << "," << r[1] << "," << r[2] << "," << r[3] << "," << r[4];
  return os.str();
}

std::vector<Placement> placements_covering(const Instance& inst, Cell cell) {
  std::vector<Placement> out;
  std::set<std::string> seen;
  for (int s = 0; s < static_cast<int>(inst.shapes.size()); ++s) {
    std::vector<Cell> refs;
    try {
      refs = reference_cells(inst.shapes[s]);
      reference_corners(inst.shapes[s]);
    } catch (const std::invalid_argument&) {
      continue;  // geometrically unrealizable shape; validation reports it
    }
    for (const Iso& g : point_group(!inst.orientation_sensitive)) {
      for (Cell rc : refs) {
        Cell img = apply(Iso{g.r, g.m, {0, 0}}, rc);
        if (img.up != cell.up) continue;
        Placement p{s, Iso{g.r, g.m, {cell.a - img.a, cell.b - img.b}}};
        if (seen.insert(placement_descriptor(inst, p)).second) out.push_back(p);
      }
    }
  }
  return out;
}

std::vector<Cell> Patch::cells() const {
  std::vector<Cell> out;
  out.reserve(cells_.size());
  for (auto& kv : cells_) out.push_back(kv.first);
  std::sort(out.begin(), out.end());
  return out;
}

PlaceStatus Patch::can_place(const Placement& p) const {
  Patch tmp(*this);
  return tmp.place_mut(p);
}

std::optional<Patch> Patch::place(const Placement& p) const {
  Patch tmp(*this);
  if (tmp.place_mut(p) != PlaceStatus::ok) return std::nullopt;
  return tmp;
}

PlaceStatus Patch::place_mut(const Placement& p) { return try_fill(p); }

PlaceStatus Patch::try_fill(const Placement& p) {
  std::vector<Cell> pc;
  std::vector<CornerSlot> corners;
  try {
    pc = placement_cells(*inst_, p);
    corners = placement_corners(*inst_, p);
  } catch (const std::invalid_argument&) {
    return PlaceStatus::bad_shape;
  }
  for (Cell c : pc)
    if (cells_.count(c)) return PlaceStatus::overlap;
  int idx = static_cast<int>(pls_.size());
  pls_.push_back(p);
  for (Cell c : pc) cells_[c] = idx;
  for (const CornerSlot& cs : corners) {
    Star& st = stars_[cs.v];
    for (int j = 0; j < cs.len; ++j) {
      int k = (cs.start + j) % 6;
      st.pl[k] = idx;
      st.corner[k] = static_cast<int8_t>(cs.corner);
      ++st.units;
    }
  }
  for (const CornerSlot& cs : corners) {
    if (ring_embeds(*inst_, star_arcs(cs.v)).empty()) {
      remove_placement(idx);
      return PlaceStatus::illegal_vertex;
    }
  }
  return PlaceStatus::ok;
}

void Patch::unplace_last() {
  if (!pls_.empty()) remove_placement(static_cast<int>(pls_.size()) - 1);
}

void Patch::remove_placement(int idx) {
  // only ever called on the most recent placement
  const Placement p = pls_.at(idx);
  for (Cell c : placement_cells(*inst_, p)) cells_.erase(c);
  for (const CornerSlot& cs : placement_corners(*inst_, p)) {
    auto it = stars_.find(cs.v);
    for (int j = 0; j < cs.len; ++j) {
      int k = (cs.start + j) % 6;
      it->second.pl[k] = -1;
      it->second.corner[k] = -1;
      --it->second.units;
    }
    if (it->second.units == 0) stars_.erase(it);
  }
  pls_.pop_back();
}

std::vector<PlacedArc> Patch::star_arcs(Vtx v) const {
  std::vector<PlacedArc> out;
  auto it = stars_.find(v);
  if (it == stars_.end()) return out;
  const Star& st = it->second;
  for (int k = 0; k < 6; ++k) {
    if (st.pl[k] < 0) continue;
    int prev = (k + 5) % 6;
    if (st.pl[prev] == st.pl[k] && st.corner[prev] == st.corner[k]) continue;
    const Placement& p = pls_[st.pl[k]];
    out.push_back({k, inst_->shapes.at(p.shape).corners.at(st.corner[k])});
  }
  return out;
}

int Patch::star_units(Vtx v) const {
  auto it = stars_.find(v);
  return it == stars_.end() ? 0 : it->second.units;
}

int Patch::longest_run(Vtx v) const {
  auto it = stars_.find(v);
  if (it == stars_.end()) return 0;
  const Star& st = it->second;
  if (it->second.units == 6) return 6;
  int best = 0;
  for (int k = 0; k < 6; ++k) {
    if (st.pl[(k + 5) % 6] >= 0 || st.pl[k] < 0) continue;
    int len = 0;
    while (st.pl[(k + len) % 6] >= 0) ++len;
    best = std::max(best, len);
  }
  return best;
}

std::vector<Vtx> Patch::touched_vertices() const {
  std::vector<Vtx> out;
  out.reserve(stars_.size());
  for (auto& kv : stars_) out.push_back(kv.first);
  std::sort(out.begin(), out.end(), [](Vtx a, Vtx b) {
    return std::pair(a.x, a.y) < std::pair(b.x, b.y);
  });
  return out;
}

int Patch::sector_placement(Vtx v, int k) const {
  auto it = stars_.find(v);
  return it == stars_.end() ? -1 : it->second.pl[k];
}

int Patch::sector_corner(Vtx v, int k) const {
  auto it = stars_.find(v);
  return it == stars_.end() ? -1 : it->second.corner[k];
}

namespace {

std::string normalized_form(const Instance& inst, std::vector<Placement> pls) {
  if (pls.empty()) return "";
  Vtx shift{0, 0};
  bool first = true;
  Cell lo{0, 0, true};
  for (const Placement& p : pls)
    for (Cell c : placement_cells(inst, p))
      if (first || c < lo) {
        lo = c;
        first = false;
      }
  shift = {-lo.a, -lo.b};
  std::vector<std::string> descs;
  for (Placement p : pls) {
    p.iso.t = p.iso.t + shift;
    descs.push_back(placement_descriptor(inst, p));
  }
  std::sort(descs.begin(), descs.end());
  std::string out;
  for (auto& d : descs) {
    out += d;
    out += '\n';
  }
  return out;
}

}  // namespace

std::string oriented_form(const Patch& patch) {
  return normalized_form(patch.instance(), patch.placements());
}

std::string canonical_form(const Patch& patch) {
  const Instance& inst = patch.instance();
  std::string best;
  bool first = true;
  for (const Iso& g : point_group(!inst.orientation_sensitive)) {
    std::vector<Placement> pls;
    pls.reserve(patch.placements().size());
    for (const Placement& p : patch.placements()) pls.push_back(transformed(p, g));
    std::string s = normalized_form(inst, std::move(pls));
    if (first || s < best) {
      best = std::move(s);
      first = false;
    }
  }
  return best;
}

Patch restricted_to(const Patch& patch, const std::vector<Cell>& keep) {
  std::set<Cell> ks(keep.begin(), keep.end());
  Patch out(patch.instance());
  for (const Placement& p : patch.placements()) {
    auto pc = placement_cells(patch.instance(), p);
    if (std::all_of(pc.begin(), pc.end(), [&](Cell c) { return ks.count(c) != 0; })) {
      if (out.place_mut(p) != PlaceStatus::ok)
        throw std::logic_error("restriction of a legal patch must stay legal");
    }
  }
  return out;
}

Patch transformed(const Patch& patch, const Iso& g) {
  Patch out(patch.instance());
  for (const Placement& p : patch.placements()) {
    if (out.place_mut(transformed(p, g)) != PlaceStatus::ok)
      throw std::logic_error("isometric image of a legal patch must stay legal");
  }
  return out;
}

Patch parse_patch(const Instance& inst, const std::string& text) {
  Patch out(inst);
  std::istringstream in(text);
  std::string line;
  int ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok[0] == '#') continue;
    if (tok != "piece") throw ParseError(ln, "expected 'piece'");
    std::string shape_name, at, pos, rot_kv, flip_kv;
    if (!(ls >> shape_name >> at >> pos >> rot_kv) || at != "at")
      throw ParseError(ln, "expected: piece <shape> at <a>,<b>,<up|down> rot=<0..5> [flip]");
    int shape = -1;
    for (size_t i = 0; i < inst.shapes.size(); ++i)
      if (inst.shapes[i].name == shape_name) shape = static_cast<int>(i);
    if (shape < 0) throw ParseError(ln, "unknown shape '" + shape_name + "'");
    int a, b;
    char c1, c2;
    std::string ori;
    std::istringstream ps(pos);
    if (!(ps >> a >> c1 >> b >> c2) || c1 != ',' || c2 != ',' || !std::getline(ps, ori) ||
        (ori != "up" && ori != "down"))
      throw ParseError(ln, "bad position '" + pos + "'");
    if (rot_kv.rfind("rot=", 0) != 0) throw ParseError(ln, "expected rot=<0..5>");
    int r = -1;
    try {
      r = std::stoi(rot_kv.substr(4));
    } catch (...) {
    }
    if (r < 0 || r > 5) throw ParseError(ln, "rot must be in 0..5");
    bool flip = false;
    if (ls >> flip_kv) {
      if (flip_kv != "flip") throw ParseError(ln, "unexpected token '" + flip_kv + "'");
      flip = true;
    }
    if (flip && inst.orientation_sensitive)
      throw ParseError(ln, "flipped piece in an orientation-sensitive instance");
    Cell img = apply(Iso{r, flip, {0, 0}}, Cell{0, 0, true});
    if (img.up != (ori == "up"))
      throw ParseError(ln, "orientation '" + ori + "' inconsistent with rot/flip");
    Placement p{shape, Iso{r, flip, {a - img.a, b - img.b}}};
    switch (out.place_mut(p)) {
      case PlaceStatus::ok:
        break;
      case PlaceStatus::overlap:
        throw ParseError(ln, "piece overlaps an earlier piece");
      case PlaceStatus::illegal_vertex:
        throw ParseError(ln, "piece creates an illegal vertex arrangement");
      case PlaceStatus::bad_shape:
        throw ParseError(ln, "shape '" + shape_name + "' has unrealizable corner angles");
    }
  }
  return out;
}

std::string patch_to_string(const Patch& patch) {
  std::ostringstream os;
  for (const Placement& p : patch.placements()) {
    Cell img = apply(p.iso, Cell{0, 0, true});
    os << "piece " << patch.instance().shapes.at(p.shape).name << " at " << img.a << "," << img.b
       << "," << (img.up ? "up" : "down") << " rot=" << p.iso.r;
    if (p.iso.m) os << " flip";
    os << "\n";
  }
  return os.str();
}

}  // namespace ringforge
