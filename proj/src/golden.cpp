#include "vines/golden.hpp"

#include <algorithm>

namespace vines::golden {

const std::vector<TableARow>& table_a() {
  static const std::vector<TableARow> rows{
      {1, "gbg1v1v1p1p1", 6, 10, 4, 76, {179, 181}, {0, 1}},
      {2, "gbg1v1v1p1v1x1", 6, 12, 3, 75, {41, 43}, {0, 1}},
      {3, "gbg1v1v1p1v1x0p1x0p0x1p0x1", 12, 10, 6, 94, {41, 43}, {0, 1}},
      {4, "gbg1v1v1p1p1v1x0x0p0x1x0", 10, 10, 6, 94, {29, 31}, {0}},
      {5, "gbg1v1v1p1p1v1x0x0p1x0x0", 10, 14, 7, 119, {59, 61}, {0}},
      {6, "gbg1v1v1p1p1v1x0x0p0x1x0v1x0p0x1", 14, 10, 9, 121, {59, 61}, {0}},
      {7, "gbg1v1v1v1p1v1x0p1x0", 8, 6, 7, 87, {41, 43}, {0, 4}},
      {8, "gbg1v1v1v1p1v1x0p1x0p1x0", 10, 14, 5, 101, {37, 41}, {}},
      {9, "gbg1v1v1v1p1v1x0p0x1v1x0p0x1", 12, 2, 9, 89, {41, 43}, {0, 4}},
      {10, "gbg1v1v1v1p1v1x0p1x0v1x0p0x1", 12, 6, 7, 87, {59}, {0, 2}},
      {11, "gbg1v1v1v1p1v1x0p0x1v1x1", 10, 4, 6, 70, {59}, {0, 2}},
      {12, "gbg1v1v1v1p1v1x0p1x0v1x0p1x0p0x1", 14, 10, 11, 139, {73, 79}, {0}},
      {13, "gbg1v1v1v1p1v1x0p0x1v1x1p1x0", 12, 8, 10, 122, {73, 79}, {0}},
      {14, "gbg1v1v1v1p1v1x0p1x0p0x1v1x0x0p0x1x0p0x0x1p0x0x1", 18, 10, 9, 121, {37, 41}, {}},
      {15, "gbg1v1v1p1v1x0p1x0p0x1v0x1x0p0x0x1v0x1", 16, 6, 11, 123, {73, 79}, {0, 2}},
      {16, "gbg1v1v1p1p1v1x0x0p0x1x0v1x0p0x1v1x0p0x1", 18, 10, 11, 139, {103, 107}, {}},
      {17, "gbg1v1v1v1v1p1p1v1x0x0p0x1x0v1x0", 12, 10, 7, 103, {43, 47}, {}},
      {18, "gbg1v1v1v1p1v1x0p1x0v1x0p1x0p0x1v1x0x0", 16, 10, 12, 148, {59, 61}, {}},
      {19, "gbg1v1v1v1p1v1x0p0x1v1x1p1x0v0x1", 14, 8, 11, 131, {59, 61}, {}},
      {20, "gbg1v1v1v1p1v1x0p1x0v1x0p0x1v1x1", 14, 8, 8, 104, {5, 7}, {}},
      {21, "gbg1v1v1v1p1v1x0p1x0v1x0v1", 12, 6, 8, 96, {37, 41}, {2}},
      {22, "gbg1v1v1v1p1v1x0p1x0v1x0v1p1p1", 16, 18, 17, 225, {47, 53}, {}},
      {23, "gbg1v1v1v1p1v1x0p1x0v1x0p1x0v1x0p0x1", 16, 10, 9, 121, {5, 7}, {}},
      {24, "gbg1v1v1v1p1v1x0p0x1v1x1v1v1", 14, 8, 8, 104, {5, 7}, {}},
      {25, "gbg1v1v1v1p1v1x0p0x1v1x0p1x0p0x1v0x0x1v1", 18, 6, 11, 123, {37, 41}, {2}},
      {26, "gbg1v1v1v1p1v1x0p0x1v1x0p1x0p0x1v0x1x0p0x1x0p0x0x1v1x0x0p0x1x0p0x0x1p0x0x1p0x0x1", 30, 22, 24, 304, {47, 53}, {}},
      {27, "gbg1v1v1v1p1v1x0p0x1v1x0p1x0p1x0p0x1v0x0x0x1p0x0x0x1v1x0p0x1", 24, 18, 22, 270, {47, 53}, {}},
      {28, "gbg1v1v1v1p1v1x0p1x0v1x0p0x1v1x0p0x1v1x1", 18, 8, 11, 131, {59, 61}, {2}},
      {29, "gbg1v1v1v1p1v1x0p0x1v1x0p1x0p0x1p0x1v0x0x0x1p1x0x0x0v1x0p1x0p0x1p0x1", 28, 18, 29, 333, {59, 61}, {2}},
      {30, "gbg1v1v1v1p1v1x0p1x0v1x0p0x1v1x0p0x1v1x0p1x0p0x1p0x1", 24, 14, 14, 182, {59, 61}, {2}},
      {31, "gbg1v1v1v1p1v1x0p0x1v1x0p1x0p0x1p0x1v0x0x0x1p1x0x0x0v1x1", 22, 12, 13, 165, {59, 61}, {2}},
      {32, "gbg1v1v1v1v1p1p1v1x0x0p0x1x0v1x0v1v1", 16, 10, 12, 148, {37, 41}, {1}},
      {33, "gbg1v1v1v1p1v1x0p1x0v1x0p0x1v1x0p0x1v1x0p1x0p0x1p0x1v1x0x0x1", 26, 16, 23, 271, {17, 19}, {}},
      {34, "gbg1v1v1v1p1v1x0p0x1v1x0p1x0p0x1p0x1v0x0x0x1p1x0x0x0v1x0p1x0p0x1p0x1v1x0x1x0", 30, 20, 27, 323, {17, 19}, {}},
      {35, "gbg1v1v1v1p1v1x0p0x1p1x0v1x0x0p0x1x0p0x1x0v1x0x0p0x0x1v1x0v1", 24, 10, 18, 202, {43, 47}, {}},
      {36, "gbg1v1v1v1p1v1x0p0x1v1x0p1x0p0x1p0x1v0x0x0x1p1x0x0x0v1x1v1v1", 26, 16, 23, 271, {17, 19}, {}},
      {37, "gbg1v1v1v1p1v1x0p1x0v1x0p0x1v1x0p0x1v1x1v1v1", 22, 12, 17, 201, {17, 19}, {}},
      {38, "gbg1v1v1v1p1v1x0p1x0p0x1v1x0x0p0x1x0p0x0x1v0x1x0p0x0x1v1x0p0x1v0x1v1", 28, 6, 20, 204, {43, 47}, {}},
  };
  return rows;
}

const TableARow* table_a_row(int row) {
  const auto& t = table_a();
  auto it = std::find_if(t.begin(), t.end(), [row](const TableARow& r) { return r.row == row; });
  return it == t.end() ? nullptr : &*it;
}

const std::vector<Erratum>& errata() {
  static const std::vector<Erratum> e{
      {5, {1}, "printed j=0; j=0 fails at p=7 and j=1 passes with norm squared exactly 5"},
      {6, {1}, "printed j=0; j=0 fails at p=7 and j=1 passes with norm squared exactly 5"},
  };
  return e;
}

std::vector<long> corrected_exceptions(const TableARow& r) {
  for (const auto& e : errata())
    if (e.row == r.row) return e.exceptions;
  return r.exceptions;
}

const std::vector<PolyRow>& table_b() {
  static const std::vector<PolyRow> rows{
      {1, 1, {1, -32, 56}},
      {2, 1, {1, -63, 105}},
      {3, 1, {1, -63, 105}},
      {10, 0, {1, -65, 275}},
      {10, 2, {1, -338, 2535, -4225}},
      {11, 0, {1, -65, 275}},
      {11, 2, {1, -338, 2535, -4225}},
      {12, 0, {1, -108, 1377, -4617}},
      {13, 0, {1, -108, 1377, -4617}},
      {15, 0, {5, -143, 676, -845}},
      {15, 2, {1, -156, 792}},
      {28, 2, {1, -684, 8505, -26163}},
      {29, 2, {1, -684, 8505, -26163}},
      {30, 2, {1, -684, 8505, -26163}},
      {31, 2, {1, -684, 8505, -26163}},
  };
  return rows;
}

const std::vector<PolyRow>& non_integral_dimensions() {
  static const std::vector<PolyRow> rows{
      {1, 0, {3, 0, -8, 0, 1}},
      {2, 0, {2, 0, -18, 0, 3}},
      {3, 0, {2, 0, -18, 0, 3}},
  };
  return rows;
}

const std::vector<Translate>& index_window_survivors() {
  static const std::vector<Translate> t{{4, 0}, {7, 0}, {7, 4}, {9, 0}, {9, 4}, {21, 2}, {25, 2}};
  return t;
}

const std::vector<Translate>& index_five_survivors() {
  static const std::vector<Translate> t{{5, 1}, {6, 1}};
  return t;
}

const std::vector<ExternalElimination>& external_eliminations() {
  static const std::vector<ExternalElimination> e{
      {32, 1, "formal codegree outside the field of dimensions (cited, not computed); norm squared is exactly 5"},
  };
  return e;
}

const std::vector<int>& non_salem_rows() {
  static const std::vector<int> r{22, 26, 27, 29, 33, 34, 36, 37};
  return r;
}

}  // namespace vines::golden
