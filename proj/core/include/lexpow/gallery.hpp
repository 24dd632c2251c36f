#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lexpow/betti.hpp"
#include "lexpow/bounds.hpp"
#include "lexpow/hilbert.hpp"

namespace lexpow {

// Bundled reference cases: a Hilbert function together with the expected
// Betti tables of its lex ideal and of one or more of its LPP ideals. The
// expected entries are embedded verbatim; `reproduce` recomputes every table
// and diffs it against them.
struct GalleryTable {
  std::string label;                 // e.g. "lex", "lpp(4,4,8)"
  std::optional<DegreeSequence> degrees;  // empty for the lex table
  BettiTable expected;
};

struct GalleryCase {
  std::string name;  // e.g. "example-4.1"
  int n;
  HilbertFunction hf;
  int degree_bound;
  std::vector<GalleryTable> tables;
};

const std::vector<GalleryCase>& gallery();
const GalleryCase* find_gallery_case(const std::string& name);

struct GalleryDiff {
  std::string table_label;
  std::vector<DominanceWitness> mismatches;  // (i, j, computed, expected), both directions
};

struct GalleryResult {
  std::string name;
  std::vector<std::string> rendered;  // formatted computed tables, same order as the case
  std::vector<GalleryDiff> diffs;     // one entry per table with any mismatch
  bool ok() const { return diffs.empty(); }
};

// Recomputes every table of the named case and compares with the embedded
// expectation, entry by entry.
GalleryResult run_gallery_case(const GalleryCase& item);

}  // namespace lexpow
