#include <doctest.h>

#include <sstream>

#include "lexpow/betti.hpp"
#include "lexpow/gallery.hpp"
#include "lexpow/lex.hpp"
#include "lexpow/lpp.hpp"

using namespace lexpow;

TEST_CASE("every bundled reference case reproduces exactly") {
  for (const GalleryCase& item : gallery()) {
    CAPTURE(item.name);
    GalleryResult result = run_gallery_case(item);
    for (const GalleryDiff& diff : result.diffs) {
      CAPTURE(diff.table_label);
      for (const DominanceWitness& w : diff.mismatches) {
        std::ostringstream os;
        os << "beta(" << w.i << "," << w.j << ") computed " << w.left << " expected " << w.right;
        FAIL_CHECK(os.str());
      }
    }
    CHECK(result.ok());
  }
}

TEST_CASE("gallery spot values follow the embedded tables") {
  const GalleryCase* first = find_gallery_case("example-4.1");
  REQUIRE(first != nullptr);
  // Left table: column 0 row 4 and column 2 row 12.
  CHECK(first->tables[0].expected.at(0, 4) == 3);
  CHECK(first->tables[0].expected.at(2, 14) == 2);
  // Right table: 13 nonzero entries; spot column 1 row 11.
  CHECK(first->tables[1].expected.entries().size() == 13);
  CHECK(first->tables[1].expected.at(1, 12) == 3);
  CHECK(first->tables[0].expected.entries().size() == 27);

  const GalleryCase* third = find_gallery_case("example-4.3");
  REQUIRE(third != nullptr);
  for (const GalleryTable& table : third->tables) {
    CHECK(table.expected.at(0, 3) == 6);
  }
  CHECK(third->tables[2].expected.max_row() - third->tables[2].expected.min_row() + 1 == 4);
}

TEST_CASE("reference constructions stay stable past the declared window") {
  // The declared tails really are the eventual behavior: recompute each
  // Hilbert function a few degrees past the construction window.
  for (const GalleryCase& item : gallery()) {
    CAPTURE(item.name);
    MonomialIdeal lex = lex_ideal_from_hf(item.hf, item.degree_bound);
    HilbertFunction extended = hilbert_function(lex, item.degree_bound + 4);
    for (int j = 0; j <= item.degree_bound + 4; ++j) {
      CHECK(extended.value(j) == item.hf.value(j));
    }
    for (const GalleryTable& table : item.tables) {
      if (!table.degrees) continue;
      MonomialIdeal lpp = lpp_from_hf(item.hf, *table.degrees, item.degree_bound);
      HilbertFunction lpp_extended = hilbert_function(lpp, item.degree_bound + 4);
      for (int j = 0; j <= item.degree_bound + 4; ++j) {
        CHECK(lpp_extended.value(j) == item.hf.value(j));
      }
    }
  }
}

TEST_CASE("rendering the gallery is deterministic") {
  const GalleryCase* item = find_gallery_case("example-4.1");
  REQUIRE(item != nullptr);
  GalleryResult a = run_gallery_case(*item);
  GalleryResult b = run_gallery_case(*item);
  CHECK(a.rendered == b.rendered);
}
