#pragma once
// Window generation and recognition for the classification of complete
// puzzles over an instance: thirteen named types (nine exceptional, four
// series).  Each type has a pinned seed and, when the instance admits its
// texture, a direct window generator.  Types whose defining local
// configuration is refuted by the ring set are reported through
// TextureMismatch carrying the live certificate numbers — a mismatch is a
// finding, never silently repaired.
//
// The certificate suite (lemma_suite) re-derives every supporting count on
// the spot: `expected` is what the reference classification asserts,
// `actual` is what exhaustive completion finds.  Certificates that disagree
// stay red; they document where this instance's rings diverge from the
// reference texture family.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "core/enumerate.hpp"
#include "core/patch.hpp"

namespace ringforge {

enum class ClassTag {
  diamond_plane,    // the all-lozenge plane
  two_by_one,       // every component a 1x2 domino
  star_two_by_inf,  // star extension of the semi-infinite width-2 strip
  three_strip,      // plane of parallel triple strips
  half_three_strip, // one half-puzzle bounded by the triple-strip boundary
  series_A,         // alternating diamond-strip / mixed-strip stack
  series_B,         // staircase ladder of finite rows (tower widths)
  series_C,         // the unique puzzle around a 2xn component, n >= 3
  series_D,         // triple-strip stack of height h
  opposite_acute,   // acute sector, outer triangle rows on equal sides
  adjacent_acute,   // acute sector, outer triangle rows on mixed sides
  obtuse_sector,    // the unique puzzle around an obtuse sector corner
  v_puzzle,         // two interlocked half-planes of semi-infinite rows
};
inline constexpr int kClassTagCount = 13;

const char* class_tag_name(ClassTag t);
std::optional<ClassTag> class_tag_from_name(const std::string& name);

struct ClassificationType {
  ClassTag tag = ClassTag::diamond_plane;
  std::vector<int> heights;  // series_A strip heights / series_B row widths
  int n = 0;                 // series_C column count (>= 3)
  int h = 0;                 // series_D strip count (>= 1)
};

// "series_A:1,2", "series_C:4", "obtuse_sector", ...
ClassificationType parse_class_spec(const std::string& spec);
std::string class_to_string(const ClassificationType& t);

// A type's texture contradicts this instance's rings: the named certificate
// expected `expected` completions and the engine found `actual`.
struct TextureMismatch : std::runtime_error {
  std::string certificate;
  long long expected = 0;
  long long actual = 0;
  TextureMismatch(std::string cert, long long exp, long long act);
};

struct PuzzleWindow {
  Patch patch;
  int radius = 0;
  std::string provenance;
};

// The pinned seed configuration for a type (small; used by extend/enumerate
// experiments and by the certificates).  Defined for every type, including
// refuted ones — the seed is the configuration whose completion count the
// certificate measures.
Patch seed_patch(const Instance&, const ClassificationType&);

// A radius-r window of the type's puzzle, centered on its characteristic
// cell.  Direct texture construction where the grammar is known; pinned-seed
// exhaustive completion for the sector types.  Throws TextureMismatch for
// types the instance refutes, and std::invalid_argument for ill-formed
// parameters (series_B requires an entry >= 3; series_C n >= 3; ...).
PuzzleWindow generate_window(const Instance&, const ClassificationType&,
                             int radius);

struct ClassMatch {
  ClassTag tag;
  std::string constraint;  // e.g. "n=3", "some height >= 2 visible"
};

// All types consistent with the window: every lozenge-component profile
// visible in the window narrows the candidate set; the result is the
// intersection.  An empty result means no classified puzzle can contain the
// window (a counterexample candidate if the window came from a legal ball).
// A window with no lozenge evidence returns every non-refuted type.
std::vector<ClassMatch> classify_window(const PuzzleWindow&);

struct LemmaCert {
  std::string name;      // what local configuration is counted
  std::string setup;     // seed and radius, human-readable
  long long expected;    // count asserted by the reference classification
  long long actual;      // count measured by exhaustive completion
  bool pass;
};

// Every supporting certificate, computed live.  Red entries are findings.
std::vector<LemmaCert> lemma_suite(const Instance&);
// One certificate by name; throws std::invalid_argument for unknown names.
LemmaCert run_lemma(const Instance&, const std::string& name);
std::vector<std::string> lemma_names();

}  // namespace ringforge
