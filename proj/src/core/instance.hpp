#pragma once
// Ring-puzzle instance: colored shapes (unit triangles / 60-120 lozenges on the
// triangular lattice) plus the legal vertex rings.  Angles in units of pi/3,
// so a full ring is 6 units and a ring word is a cyclic arc sequence of total
// length 6.  Arcs are atomic: a 2-unit arc is not two 1-unit arcs.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ringforge {

using ColorId = int;

struct Arc {
  ColorId color = 0;
  int len = 1;
  auto operator<=>(const Arc&) const = default;
};

enum class ShapeKind { triangle, lozenge };

struct Shape {
  std::string name;
  ShapeKind kind = ShapeKind::triangle;
  std::vector<Arc> corners;  // ccw corner arcs
};

struct Ring {
  std::string name;
  std::vector<Arc> word;  // cyclic, lengths sum to 6
};

struct ParseError : std::runtime_error {
  int line;
  ParseError(int ln, const std::string& msg)
      : std::runtime_error("line " + std::to_string(ln) + ": " + msg),
        line(ln) {}
};

// One positioned coloring of a ring on the six sectors of a vertex.
struct RingPose {
  int ring = 0;
  int rot = 0;
  bool refl = false;
  std::array<ColorId, 6> color{};
  std::array<uint8_t, 6> arc_begin{};  // 1 where an arc starts
};

struct Instance {
  std::vector<std::string> colors;
  std::vector<Shape> shapes;
  std::vector<Ring> rings;
  bool orientation_sensitive = false;

  // derived (finalize)
  std::vector<RingPose> poses;    // distinct positioned colorings over all rings
  std::vector<Arc> arc_alphabet;  // distinct arcs occurring in ring words

  int color_id(const std::string& name) const;
  const std::string& color_name(ColorId c) const { return colors[c]; }
  void finalize();
};

Instance parse_instance(const std::string& text);
Instance load_instance(const std::string& path);

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> passes, warnings, errors;
  std::string text() const;
};
ValidationReport validate_instance(const Instance&);

// Largest theta such that some arc word of length theta admits two completions
// that are inequivalent under color-preserving circle isometries fixing the
// word (for the empty word: under all of them); 0 when no length is ambiguous.
int compute_theta0(const Instance&);

// Partial cyclic arrangement: arcs at fixed unit positions, non-overlapping.
struct PlacedArc {
  int pos = 0;  // occupies slots [pos, pos+len) mod 6
  Arc arc;
};

// All ring poses consistent with the arrangement (each placed arc must
// coincide with an arc of the pose), deduplicated by induced coloring.
std::vector<RingPose> ring_embeds(const Instance&,
                                  const std::vector<PlacedArc>&);

// Minimal rotation (and reflection unless orientation_sensitive) serialization
// of a ring word; equal strings == same ring up to colored isometry.
std::string ring_canonical(const Instance&, const std::vector<Arc>& word);

std::string arc_to_string(const Instance&, const Arc&);
std::string word_to_string(const Instance&, const std::vector<Arc>&);

}  // namespace ringforge
