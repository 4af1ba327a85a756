#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace vines::golden {

struct TableARow {
  int row;
  std::string graph;
  long s;
  long K;
  long R;
  long N;
  /// Primes at which every translate outside the exceptions fails.
  std::vector<std::uint64_t> primes;
  /// Exceptions as printed.
  std::vector<long> exceptions;
};

const std::vector<TableARow>& table_a();
const TableARow* table_a_row(int row);

struct Erratum {
  int row;
  std::vector<long> exceptions;
  std::string note;
};

const std::vector<Erratum>& errata();

/// Printed exceptions with errata applied.
std::vector<long> corrected_exceptions(const TableARow& r);

/// Coefficients are listed from the leading term down.
struct PolyRow {
  int row;
  long j;
  std::vector<long> coeffs;
};

/// Translates eliminated by the d-number test with the minimal polynomial of
/// the global even dimension.
const std::vector<PolyRow>& table_b();

/// Translates whose bottom depth-3 vertex has a dimension that is not an
/// algebraic integer.
const std::vector<PolyRow>& non_integral_dimensions();

struct Translate {
  int row;
  long j;
};

/// Survivors with norm squared in (4, 5).
const std::vector<Translate>& index_window_survivors();
/// Survivors with norm squared exactly 5.
const std::vector<Translate>& index_five_survivors();

struct ExternalElimination {
  int row;
  long j;
  std::string reason;
};

/// Translates that pass every implemented test and are excluded by an
/// argument outside this library.
const std::vector<ExternalElimination>& external_eliminations();

/// Rows whose vine is not a Salem vine.
const std::vector<int>& non_salem_rows();

inline constexpr int kCyclotomicSurvivors = 28;
inline constexpr int kFinalSurvivors = 9;

}  // namespace vines::golden
