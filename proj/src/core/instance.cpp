#include "core/instance.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace ringforge {

int Instance::color_id(const std::string& name) const {
  for (size_t i = 0; i < colors.size(); ++i)
    if (colors[i] == name) return (int)i;
  return -1;
}

std::string arc_to_string(const Instance& inst, const Arc& a) {
  return inst.colors[a.color] + ":" + std::to_string(a.len);
}

std::string word_to_string(const Instance& inst, const std::vector<Arc>& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += arc_to_string(inst, w[i]);
  }
  return s;
}

static int word_units(const std::vector<Arc>& w) {
  return std::accumulate(w.begin(), w.end(), 0,
                         [](int t, const Arc& a) { return t + a.len; });
}

void Instance::finalize() {
  poses.clear();
  arc_alphabet.clear();
  std::set<std::pair<std::array<ColorId, 6>, std::array<uint8_t, 6>>> seen;
  std::set<Arc> alpha;
  for (size_t ri = 0; ri < rings.size(); ++ri) {
    const auto& word = rings[ri].word;
    for (const Arc& a : word) alpha.insert(a);
    for (int refl = 0; refl < (orientation_sensitive ? 1 : 2); ++refl) {
      std::vector<Arc> w = word;
      if (refl) std::reverse(w.begin(), w.end());
      for (int rot = 0; rot < 6; ++rot) {
        RingPose p;
        p.ring = (int)ri;
        p.rot = rot;
        p.refl = refl != 0;
        int s = rot;
        for (const Arc& a : w) {
          p.arc_begin[s % 6] = 1;
          for (int i = 0; i < a.len; ++i) p.color[(s + i) % 6] = a.color;
          s += a.len;
        }
        if (seen.insert({p.color, p.arc_begin}).second) poses.push_back(p);
      }
    }
  }
  arc_alphabet.assign(alpha.begin(), alpha.end());
}

std::string ring_canonical(const Instance& inst, const std::vector<Arc>& word) {
  std::string best;
  for (int refl = 0; refl < (inst.orientation_sensitive ? 1 : 2); ++refl) {
    std::vector<Arc> w = word;
    if (refl) std::reverse(w.begin(), w.end());
    for (size_t k = 0; k < w.size(); ++k) {
      std::rotate(w.begin(), w.begin() + 1, w.end());
      std::string s = word_to_string(inst, w);
      if (best.empty() || s < best) best = s;
    }
  }
  return best;
}

// ---- parsing -------------------------------------------------------------

static std::vector<Arc> parse_arc_list(const Instance& inst,
                                       const std::string& text, int line) {
  std::vector<Arc> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw ParseError(line, "expected color:length, got '" + item + "'");
    std::string cname = item.substr(0, colon);
    int id = inst.color_id(cname);
    if (id < 0) throw ParseError(line, "unknown color '" + cname + "'");
    int len = 0;
    try {
      len = std::stoi(item.substr(colon + 1));
    } catch (...) {
      throw ParseError(line, "bad arc length in '" + item + "'");
    }
    if (len < 1) throw ParseError(line, "arc length must be positive");
    out.push_back({id, len});
  }
  if (out.empty()) throw ParseError(line, "empty arc list");
  return out;
}

static std::map<std::string, std::string> split_kv(
    const std::vector<std::string>& toks, size_t from, int line) {
  std::map<std::string, std::string> kv;
  for (size_t i = from; i < toks.size(); ++i) {
    auto eq = toks[i].find('=');
    if (eq == std::string::npos)
      throw ParseError(line, "expected key=value, got '" + toks[i] + "'");
    kv[toks[i].substr(0, eq)] = toks[i].substr(eq + 1);
  }
  return kv;
}

Instance parse_instance(const std::string& text) {
  Instance inst;
  std::stringstream ss(text);
  std::string raw;
  int line = 0;
  std::vector<int> ring_lines;
  while (std::getline(ss, raw)) {
    ++line;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::stringstream ls(raw);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (toks.empty()) continue;
    if (toks[0] == "color") {
      if (toks.size() != 2) throw ParseError(line, "usage: color <name>");
      if (inst.color_id(toks[1]) >= 0)
        throw ParseError(line, "duplicate color '" + toks[1] + "'");
      inst.colors.push_back(toks[1]);
    } else if (toks[0] == "shape") {
      if (toks.size() < 2) throw ParseError(line, "shape needs a name");
      Shape sh;
      sh.name = toks[1];
      for (const auto& s : inst.shapes)
        if (s.name == sh.name)
          throw ParseError(line, "duplicate shape '" + sh.name + "'");
      auto kv = split_kv(toks, 2, line);
      if (!kv.count("kind") || !kv.count("corners"))
        throw ParseError(line, "shape needs kind= and corners=");
      if (kv["kind"] == "triangle")
        sh.kind = ShapeKind::triangle;
      else if (kv["kind"] == "lozenge")
        sh.kind = ShapeKind::lozenge;
      else
        throw ParseError(line, "unknown shape kind '" + kv["kind"] + "'");
      sh.corners = parse_arc_list(inst, kv["corners"], line);
      size_t need = sh.kind == ShapeKind::triangle ? 3 : 4;
      if (sh.corners.size() != need)
        throw ParseError(line, kv["kind"] + " needs " + std::to_string(need) +
                                   " corners");
      inst.shapes.push_back(std::move(sh));
    } else if (toks[0] == "ring") {
      if (toks.size() < 2) throw ParseError(line, "ring needs a name");
      Ring r;
      r.name = toks[1];
      for (const auto& q : inst.rings)
        if (q.name == r.name)
          throw ParseError(line, "duplicate ring '" + r.name + "'");
      auto kv = split_kv(toks, 2, line);
      if (!kv.count("word")) throw ParseError(line, "ring needs word=");
      r.word = parse_arc_list(inst, kv["word"], line);
      if (word_units(r.word) != 6)
        throw ParseError(line, "ring length must be 2*pi (6 units), got " +
                                   std::to_string(word_units(r.word)));
      inst.rings.push_back(std::move(r));
      ring_lines.push_back(line);
    } else if (toks[0] == "option") {
      auto kv = split_kv(toks, 1, line);
      for (auto& [k, v] : kv) {
        if (k == "orientation_sensitive") {
          if (v != "true" && v != "false")
            throw ParseError(line, "orientation_sensitive must be true/false");
          inst.orientation_sensitive = v == "true";
        } else {
          throw ParseError(line, "unknown option '" + k + "'");
        }
      }
    } else {
      throw ParseError(line, "unknown directive '" + toks[0] + "'");
    }
  }
  // rings equal up to colored isometry are duplicates (checked once the
  // orientation option is known)
  for (size_t i = 0; i < inst.rings.size(); ++i)
    for (size_t j = i + 1; j < inst.rings.size(); ++j)
      if (ring_canonical(inst, inst.rings[i].word) ==
          ring_canonical(inst, inst.rings[j].word))
        throw ParseError(ring_lines[j], "duplicate ring '" +
                                            inst.rings[j].name +
                                            "' (isometric to '" +
                                            inst.rings[i].name + "')");
  inst.finalize();
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open instance file: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_instance(ss.str());
}

// ---- validation ----------------------------------------------------------

// orbit id per corner under the shape's colored symmetry group
static std::vector<int> corner_orbits(const Shape& sh, bool allow_refl) {
  int n = (int)sh.corners.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  auto& w = sh.corners;
  for (int s = 1; s < n; ++s) {
    bool ok = true;
    for (int j = 0; j < n; ++j)
      if (w[(j + s) % n] != w[j]) ok = false;
    if (ok)
      for (int j = 0; j < n; ++j) unite(j, (j + s) % n);
  }
  if (allow_refl)
    for (int t = 0; t < n; ++t) {
      bool ok = true;
      for (int j = 0; j < n; ++j)
        if (w[((t - j) % n + n) % n] != w[j]) ok = false;
      if (ok)
        for (int j = 0; j < n; ++j) unite(j, ((t - j) % n + n) % n);
    }
  std::vector<int> orbit(n);
  for (int j = 0; j < n; ++j) orbit[j] = find(j);
  return orbit;
}

ValidationReport validate_instance(const Instance& inst) {
  ValidationReport rep;
  auto check = [&](bool ok, const std::string& name, const std::string& why) {
    if (ok)
      rep.passes.push_back(name);
    else {
      rep.errors.push_back(name + ": " + why);
      rep.ok = false;
    }
  };

  // arc-length rule: lengths are 1 or 2; exactly one color carries the 2-unit
  // arcs and it never occurs with length 1 (if a color is literally named
  // "yellow" it must be that color)
  {
    std::map<ColorId, std::set<int>> lens;
    for (const auto& sh : inst.shapes)
      for (const Arc& a : sh.corners) lens[a.color].insert(a.len);
    for (const auto& r : inst.rings)
      for (const Arc& a : r.word) lens[a.color].insert(a.len);
    std::string why;
    for (auto& [c, ls] : lens) {
      for (int l : ls)
        if (l != 1 && l != 2)
          why = "arc of length " + std::to_string(l) + " on color " +
                inst.colors[c];
      if (ls.size() > 1)
        why = "color " + inst.colors[c] + " occurs with several lengths";
    }
    std::vector<ColorId> twos;
    for (auto& [c, ls] : lens)
      if (ls.count(2)) twos.push_back(c);
    if (twos.size() > 1) why = "more than one 2-unit color";
    int yid = inst.color_id("yellow");
    if (yid >= 0) {
      if (lens.count(yid) && !lens[yid].count(2))
        why = "yellow arcs must have length 2";
      for (ColorId c : twos)
        if (c != yid) why = "2-unit arcs on non-yellow color " + inst.colors[c];
    }
    check(why.empty(), "arc-length rule", why);
  }

  // corner sums: interior angles of an n-gon sum to (n-2)*pi
  {
    std::string why;
    for (const auto& sh : inst.shapes) {
      int want = ((int)sh.corners.size() - 2) * 3;
      if (word_units(sh.corners) != want)
        why = "shape " + sh.name + " corners sum to " +
              std::to_string(word_units(sh.corners)) + ", expected " +
              std::to_string(want);
    }
    check(why.empty(), "shape corner sums", why);
  }

  // every ring arc realizable by some shape corner
  {
    std::set<Arc> corners;
    for (const auto& sh : inst.shapes)
      for (const Arc& a : sh.corners) corners.insert(a);
    std::string why;
    for (const auto& r : inst.rings)
      for (const Arc& a : r.word)
        if (!corners.count(a))
          why = "ring " + r.name + " arc " + arc_to_string(inst, a) +
                " matches no shape corner";
    check(why.empty(), "ring arcs realizable", why);
  }

  // corner identification: does (color,length) pin a shape corner uniquely
  // (modulo the shape's own colored symmetries)?  Ambiguity only degrades
  // forced extension, so it is a warning.
  {
    std::map<Arc, std::set<std::pair<int, int>>> owners;
    for (size_t si = 0; si < inst.shapes.size(); ++si) {
      auto orb = corner_orbits(inst.shapes[si], !inst.orientation_sensitive);
      for (size_t ci = 0; ci < inst.shapes[si].corners.size(); ++ci)
        owners[inst.shapes[si].corners[ci]].insert({(int)si, orb[ci]});
    }
    std::string amb;
    for (auto& [a, own] : owners)
      if (own.size() > 1) {
        if (!amb.empty()) amb += ", ";
        amb += arc_to_string(inst, a);
      }
    if (amb.empty())
      rep.passes.push_back("corner identification");
    else
      rep.warnings.push_back("corner identification ambiguous for: " + amb);
  }
  return rep;
}

std::string ValidationReport::text() const {
  std::string s;
  for (const auto& p : passes) s += "PASS " + p + "\n";
  for (const auto& w : warnings) s += "WARN " + w + "\n";
  for (const auto& e : errors) s += "FAIL " + e + "\n";
  s += ok ? "OK\n" : "INVALID\n";
  return s;
}

// ---- ring embeddings and theta0 ------------------------------------------

static bool pose_matches(const RingPose& p, const std::vector<PlacedArc>& arr) {
  for (const auto& pa : arr) {
    int s = ((pa.pos % 6) + 6) % 6;
    if (!p.arc_begin[s]) return false;
    for (int i = 0; i < pa.arc.len; ++i)
      if (p.color[(s + i) % 6] != pa.arc.color) return false;
    for (int i = 1; i < pa.arc.len; ++i)
      if (p.arc_begin[(s + i) % 6]) return false;
    if (!p.arc_begin[(s + pa.arc.len) % 6]) return false;
  }
  return true;
}

std::vector<RingPose> ring_embeds(const Instance& inst,
                                  const std::vector<PlacedArc>& arr) {
  // reject overlapping input
  std::array<int, 6> cover{};
  for (const auto& pa : arr)
    for (int i = 0; i < pa.arc.len; ++i) {
      int s = ((pa.pos + i) % 6 + 6) % 6;
      if (cover[s]++) return {};
    }
  std::vector<RingPose> out;
  for (const auto& p : inst.poses)
    if (pose_matches(p, arr)) out.push_back(p);
  return out;
}

// completion = the arc sequence a matching pose induces on slots [theta, 6)
static std::vector<Arc> pose_remainder(const RingPose& p, int theta) {
  std::vector<Arc> rem;
  int s = theta;
  while (s < 6) {
    int e = s + 1;
    while (e < 6 && !p.arc_begin[e]) ++e;
    rem.push_back({p.color[s], e - s});
    s = e;
  }
  return rem;
}

int compute_theta0(const Instance& inst) {
  for (int theta = 6; theta >= 1; --theta) {
    // enumerate words over the arc alphabet with total length theta
    std::vector<Arc> word;
    bool ambiguous = false;
    std::function<void(int)> rec = [&](int left) {
      if (ambiguous) return;
      if (left == 0) {
        std::vector<PlacedArc> arr;
        int s = 0;
        for (const Arc& a : word) {
          arr.push_back({s, a});
          s += a.len;
        }
        auto embeds = ring_embeds(inst, arr);
        if (embeds.size() < 2) return;
        std::vector<Arc> rev(word.rbegin(), word.rend());
        bool palindrome = !inst.orientation_sensitive && rev == word;
        std::set<std::vector<Arc>> classes;
        for (const auto& p : embeds) {
          auto c = pose_remainder(p, theta);
          if (palindrome) {
            std::vector<Arc> cr(c.rbegin(), c.rend());
            classes.insert(std::min(c, cr));
          } else {
            classes.insert(c);
          }
        }
        if (classes.size() >= 2) ambiguous = true;
        return;
      }
      for (const Arc& a : inst.arc_alphabet)
        if (a.len <= left) {
          word.push_back(a);
          rec(left - a.len);
          word.pop_back();
        }
    };
    rec(theta);
    if (ambiguous) return theta;
  }
  return 0;
}

}  // namespace ringforge
