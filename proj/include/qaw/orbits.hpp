#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "qaw/catalog.hpp"

namespace qaw {

// Expression equivalence classes: the four balanced 4phi3 classes, the seven
// very-well-poised 8W7 classes, the four converse classes, and the seven
// series representations of the polynomials (standard-map targets).
enum class ClassId {
  C3, C4, C5, C6b,
  W0, W1, W2, W7, W7b, W6, W7c,
  CW1, CW2, CW3, CW4,
  D1, D2, D3, D4, D5, D6, D7,
  Unclassified,
  Nonterminating,
};

const char* class_name(ClassId c);
const std::vector<ClassId>& phi_classes();       // C3..C6b
const std::vector<ClassId>& w_classes();         // W0..W7c
const std::vector<ClassId>& converse_classes();  // CW1..CW4

// Six parameters with the symbolic product constraint x1..x6 = q^{1-n},
// realized over the orbit frame (x6 eliminated through the constraint).
struct X6Config {
  std::array<ParamMonomial, 6> x;
  Frame frame{FrameKind::Orbit};
  void validate() const;
};

// The standard instantiation: the Watson 4phi3 pulled back to six symmetric
// parameters. Its identity image classifies as C3.
X6Config orbit_base_config();

// Pull-back of the orbit frame into BCDEF (half-integer monomials).
const Substitution& orbit_to_bcdef();

struct S6Element {
  std::array<int, 6> slot;  // image slot k takes x[slot[k]]
};
const std::vector<S6Element>& s6_elements();  // all 720, deterministic order

// The six-parameter symmetric form instantiated after permuting by g.
Expression s6_apply(const S6Element& g, const X6Config& base);

// Signed permutation of the five symmetric w-parameters; bit k of `flips`
// inverts source slot k. Even parity is the subgroup acting on the
// very-well-poised form.
struct SignedPerm {
  std::array<int, 5> slot;  // image slot k takes source slot[k]
  unsigned flips = 0;
  int parity() const { return __builtin_popcount(flips) & 1; }
};
const std::vector<SignedPerm>& wd5_elements();  // the 1920 even elements

// A very-well-poised series in w-form: the argument is implied,
// z = q^2 B^2 / (A_1...A_5).
struct WConfig {
  ParamMonomial special;
  std::array<ParamMonomial, 5> numer;

  ParamMonomial argument() const;
  bool terminating() const;
  WSpec spec() const;  // requires terminating()
};

struct WD5Image {
  bool terminating = false;
  WConfig config;
};

// The action induced on w-parameters; rational because the flip count is
// even. Throws OddParity otherwise.
WD5Image wd5_apply(const SignedPerm& g, const WConfig& base);

// Exact ratio pref(image)/pref(base) of the w-form prefactors for a
// terminating pair: the infinite-product arguments pair off by variable part
// and each pair collapses to a finite Pochhammer at the env.
Rational wd5_prefactor_ratio(const WConfig& base, const WConfig& image, const PointEnv& env);

// ---- canonical signatures & classification ----

using Signature = std::string;

// Sort parameter encodings, minimize over the relabeling substitutions.
Signature canonical_signature(const SeriesSpec& series, const std::vector<Substitution>& relabel);

const std::vector<Substitution>& cdef_relabelings();      // 24, fixes b
const std::vector<Substitution>& converse_relabelings();  // 36, {a,b,c} x {d,e,f}
const std::vector<Substitution>& aw_relabelings();        // 24, fixes t

// Against the eleven BCDEF templates (C and W classes).
ClassId classify(const SeriesSpec& series);
inline ClassId classify(const Expression& e) { return classify(e.series); }
// Against the four converse templates.
ClassId classify_converse(const SeriesSpec& series);

// Template series of a class (shared transcription with the catalog).
const SeriesSpec& class_template(ClassId c);
WConfig w_class_config(ClassId c);  // W0..W7c, CW1..CW4

// Content hash of all frozen template signatures; embedded in reports.
std::string template_signature_hash();

// ---- censuses ----

struct OrbitCensus {
  ClassId source = ClassId::Unclassified;
  std::map<ClassId, long> counts;       // terminating images per class
  long nonterminating = 0;
  long total = 0;
  long distinct_images = 0;             // ordered-arrangement count (S6)
  bool all_classified = true;
  bool values_ok = true;
  std::string failure;
};

OrbitCensus s6_census(const X6Config& base, std::uint64_t seed, int value_envs,
                      ExecMode mode = ExecMode::Parallel);
OrbitCensus wd5_census(ClassId base_class, std::uint64_t seed, int value_envs,
                       ExecMode mode = ExecMode::Parallel);
OrbitCensus converse_census_row(ClassId base_class, std::uint64_t seed, int value_envs,
                                ExecMode mode = ExecMode::Parallel);
std::vector<OrbitCensus> converse_census(std::uint64_t seed, int value_envs,
                                         ExecMode mode = ExecMode::Parallel);

enum class WatsonDirection { PhiToW, WToPhi };

struct WatsonCensus {
  WatsonDirection direction;
  std::vector<ClassId> sources, targets;
  std::map<ClassId, std::map<ClassId, long>> ours;
  std::map<ClassId, std::map<ClassId, long>> reported;  // the two unnumbered tables
  std::string convention;
  bool matches_reported() const { return ours == reported; }
};

WatsonCensus watson_permutation_census(WatsonDirection dir);

// ---- inversion pairings, standard map, graphs ----

// classify(invert(template)) for the eleven classes and the converse four.
std::map<ClassId, ClassId> inversion_pairings();

struct StandardMapEdge {
  ClassId cls;   // one of the 11
  ClassId rep;   // D1..D7
  bool flip;     // needs t -> 1/t
};
std::vector<StandardMapEdge> standard_map_edges();

enum class FigureId { Fig1, Fig2, Fig3 };
std::string emit_graph(FigureId which, std::uint64_t seed);

// ---- frozen expectations (the census tables and figure edge sets) ----

const std::map<ClassId, long>& expected_s6_counts();
const std::map<ClassId, long>& expected_wd5_row(ClassId base);
const std::map<ClassId, long>& expected_converse_row(ClassId base);
const std::map<ClassId, std::map<ClassId, long>>& expected_watson_rows(WatsonDirection dir);
const std::vector<StandardMapEdge>& expected_standard_map_edges();
const std::map<ClassId, ClassId>& expected_inversion_pairings();

}  // namespace qaw
