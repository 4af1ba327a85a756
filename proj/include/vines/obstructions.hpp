#pragma once

#include "vines/bigraph.hpp"
#include "vines/cyclotomic.hpp"
#include "vines/number_field.hpp"
#include "vines/translates.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace vines {

struct CyclotomicVerdict {
  bool passed = true;
  std::uint64_t failing_prime = 0;
  std::uint64_t bound = 0;
  /// Primes at which the factorization pattern was examined, ascending.
  std::vector<std::uint64_t> primes_tested;
};

/// Primes p <= M, ascending, skipping p dividing the leading coefficient or
/// with minpoly mod p not square-free (the primes dividing the discriminant);
/// fails at the first p where the irreducible factors mod p have different
/// degrees.
CyclotomicVerdict cyclotomic_test(const IntPoly& minpoly, std::uint64_t M);

/// True when some prime in `primes` (not dividing the discriminant) shows a
/// non-uniform factorization pattern.
bool fails_at_any(const IntPoly& minpoly, const std::vector<std::uint64_t>& primes);

/// Minimal polynomial of |g|^2 with an isolating interval for |g|^2.
struct NormSquared {
  IntPoly minpoly;
  Rational lo, hi;
  std::vector<CyclotomicFactor> cyclotomic;
};

IntPoly norm_squared_min_poly(const Bigraph& g);
NormSquared norm_squared_exact(const Bigraph& g);

struct DNumberVerdict {
  bool passed = true;
  bool algebraic_integer = true;
  /// First i with a_n^i not dividing a_i^n (0 when passed).
  std::size_t failing_index = 0;
};

DNumberVerdict d_number_test(const IntPoly& minpoly);

struct ExactDimensions {
  AdjacencyMatrix matrix;
  FieldPtr field;  // Q(lambda)
  std::vector<NumberFieldElement> dims;
};

/// Perron-Frobenius eigenvector over Q(lambda), normalized to 1 at the
/// distinguished vertex.
ExactDimensions fp_dimensions_exact(const Bigraph& g);

/// Sum of dim(v)^2 over vertices at even distance from the distinguished vertex.
NumberFieldElement global_even_dimension(const ExactDimensions& d);
IntPoly global_even_dimension_min_poly(const Bigraph& g);

struct AlgebraicIntegerVerdict {
  bool passed = true;
  std::size_t vertex = 0;
  IntPoly minpoly;
};

AlgebraicIntegerVerdict algebraic_integer_test(const ExactDimensions& d, std::size_t vertex);
AlgebraicIntegerVerdict algebraic_integer_test(const Bigraph& g, std::size_t vertex);

enum class Verdict { Survivor, EliminatedCyclotomic, EliminatedDNumber, EliminatedAlgebraicInteger };

const char* to_string(Verdict v);

struct ObstructionReport {
  std::string graph;
  long j = 0;
  long n = 0;
  IntPoly norm_sq_minpoly;
  CyclotomicVerdict cyclotomic;
  /// |Gamma_n|^2 to 40 digits, for translates passing the cyclotomic test.
  std::string norm_sq;
  std::optional<IntPoly> global_even_minpoly;
  std::optional<DNumberVerdict> dnumber;
  std::optional<AlgebraicIntegerVerdict> algebraic_integer;
  Verdict verdict = Verdict::Survivor;
  std::string reason;

  bool eliminated() const { return verdict != Verdict::Survivor; }
};

/// Screens the translates of one vine in increasing j, reusing the
/// recurrence for the characteristic polynomials and for the root-of-unity
/// detection. Not thread-safe.
class TranslateScreener {
 public:
  TranslateScreener(const Bigraph& vine, long n_max, std::uint64_t prime_bound = 200);
  ~TranslateScreener();
  TranslateScreener(const TranslateScreener&) = delete;
  TranslateScreener& operator=(const TranslateScreener&) = delete;

  ObstructionReport screen(long j);

 private:
  struct Tracker;
  Bigraph vine_;
  long n_max_;
  std::uint64_t prime_bound_;
  TranslateSequence seq_;
  std::unique_ptr<Tracker> tracker_;
};

ObstructionReport screen_translate(const Bigraph& g, long j, std::uint64_t M = 200);

}  // namespace vines
