#include "lexpow/gallery.hpp"

#include <set>

#include "lexpow/errors.hpp"

namespace lexpow {

namespace {

struct RowSpec {
  int row;  // j - i
  std::vector<long long> columns;
};

BettiTable table_from_rows(int n, const std::vector<RowSpec>& rows) {
  BettiTable table(TableConvention::of_ideal, n);
  for (const RowSpec& spec : rows) {
    for (std::size_t i = 0; i < spec.columns.size(); ++i) {
      table.add(static_cast<int>(i), spec.row + static_cast<int>(i), spec.columns[i]);
    }
  }
  return table;
}

std::vector<GalleryCase> build_gallery() {
  std::vector<GalleryCase> cases;

  {
    GalleryCase item{
        "example-4.1",
        3,
        HilbertFunction(HFConvention::of_quotient, 3,
                        {1, 3, 6, 10, 12, 12, 12, 12, 11, 9, 6, 2}, Tail::zero()),
        12,
        {}};
    item.tables.push_back({"lex", std::nullopt,
                           table_from_rows(3, {{4, {3, 3, 1}},
                                               {5, {3, 5, 2}},
                                               {6, {2, 3, 1}},
                                               {7, {1, 2, 1}},
                                               {8, {2, 4, 2}},
                                               {9, {3, 5, 2}},
                                               {10, {3, 6, 3}},
                                               {11, {4, 8, 4}},
                                               {12, {2, 4, 2}}})});
    item.tables.push_back({"lpp(4,4,8)", DegreeSequence({4, 4, 8}),
                           table_from_rows(3, {{4, {3, 1, 0}},
                                               {5, {1, 2, 1}},
                                               {6, {0, 1, 0}},
                                               {7, {0, 0, 0}},
                                               {8, {1, 0, 0}},
                                               {9, {0, 0, 0}},
                                               {10, {0, 1, 0}},
                                               {11, {1, 3, 1}},
                                               {12, {0, 1, 2}}})});
    cases.push_back(std::move(item));
  }

  {
    GalleryCase item{
        "example-4.2",
        3,
        HilbertFunction(HFConvention::of_quotient, 3, {1, 3, 6, 10, 11, 12, 11},
                        Tail::constant(11)),
        12,
        {}};
    item.tables.push_back({"lex", std::nullopt,
                           table_from_rows(3, {{4, {4, 4, 1}},
                                               {5, {1, 2, 1}},
                                               {6, {3, 5, 2}},
                                               {7, {1, 2, 1}},
                                               {8, {1, 2, 1}},
                                               {9, {1, 2, 1}},
                                               {10, {1, 2, 1}},
                                               {11, {1, 1, 0}}})});
    item.tables.push_back({"lpp(4,4,inf)",
                           DegreeSequence({4, 4, DegreeSequence::kInfinity}),
                           table_from_rows(3, {{4, {4, 3, 1}},
                                               {5, {0, 0, 0}},
                                               {6, {1, 3, 1}}})});
    cases.push_back(std::move(item));
  }

  {
    GalleryCase item{
        "example-4.3",
        4,
        HilbertFunction(HFConvention::of_quotient, 4, {1, 4, 10, 14, 17, 18, 17, 17},
                        Tail::constant(17)),
        18,
        {}};
    item.tables.push_back({"lex", std::nullopt,
                           table_from_rows(4, {{3, {6, 9, 5, 1}},
                                               {4, {3, 8, 7, 2}},
                                               {5, {5, 12, 10, 3}},
                                               {6, {5, 13, 11, 2}},
                                               {7, {2, 6, 6, 2}},
                                               {8, {2, 6, 6, 2}},
                                               {9, {2, 5, 4, 1}},
                                               {10, {1, 3, 3, 1}},
                                               {11, {1, 3, 3, 1}},
                                               {12, {1, 3, 3, 1}},
                                               {13, {1, 3, 3, 1}},
                                               {14, {1, 3, 3, 1}},
                                               {15, {1, 3, 3, 1}},
                                               {16, {1, 3, 3, 1}},
                                               {17, {1, 2, 1, 0}}})});
    item.tables.push_back({"lpp(3,3,5,inf)",
                           DegreeSequence({3, 3, 5, DegreeSequence::kInfinity}),
                           table_from_rows(4, {{3, {6, 8, 4, 1}},
                                               {4, {2, 5, 4, 1}},
                                               {5, {3, 6, 4, 1}},
                                               {6, {2, 6, 6, 2}},
                                               {7, {0, 1, 1, 0}}})});
    item.tables.push_back({"lpp(3,3,3,inf)",
                           DegreeSequence({3, 3, 3, DegreeSequence::kInfinity}),
                           table_from_rows(4, {{3, {6, 6, 4, 1}},
                                               {4, {0, 2, 0, 0}},
                                               {5, {0, 1, 0, 0}},
                                               {6, {1, 3, 4, 1}}})});
    cases.push_back(std::move(item));
  }

  return cases;
}

}  // namespace

const std::vector<GalleryCase>& gallery() {
  static const std::vector<GalleryCase> cases = build_gallery();
  return cases;
}

const GalleryCase* find_gallery_case(const std::string& name) {
  for (const GalleryCase& item : gallery()) {
    if (item.name == name) return &item;
  }
  return nullptr;
}

GalleryResult run_gallery_case(const GalleryCase& item) {
  GalleryResult result;
  result.name = item.name;
  for (const GalleryTable& spec : item.tables) {
    BettiTable computed = spec.degrees ? lpp_bound(item.hf, *spec.degrees, item.degree_bound)
                                       : bhp_bound(item.hf, item.degree_bound);
    result.rendered.push_back(spec.label + ":\n" + format_table(computed));
    std::set<BettiTable::Key> keys;
    for (const auto& [key, value] : computed.entries()) keys.insert(key);
    for (const auto& [key, value] : spec.expected.entries()) keys.insert(key);
    GalleryDiff diff{spec.label, {}};
    for (const auto& key : keys) {
      const long long got = computed.at(key.first, key.second);
      const long long want = spec.expected.at(key.first, key.second);
      if (got != want) diff.mismatches.push_back({key.first, key.second, got, want});
    }
    if (!diff.mismatches.empty()) result.diffs.push_back(std::move(diff));
  }
  return result;
}

}  // namespace lexpow
