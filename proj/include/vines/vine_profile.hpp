#pragma once

#include "vines/bigraph.hpp"
#include "vines/derivative_bound.hpp"
#include "vines/laurent_poly.hpp"
#include "vines/translates.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vines {

class UnsupportedVine : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A(t) with t^n A(t) - t^-n A(1/t) = (t - 1/t) F_n(t) for all n past the
/// stabilization index.
struct Separation {
  LaurentPoly A;
  /// First k with C_k = C_{k+1}.
  long stable_index = 0;
  /// 1 - (lowest exponent of A); the first separated index.
  long s = 0;
};

Separation compute_A_and_s(TranslateSequence& seq);

/// A = t^-shift B C, B the product of all self-reciprocal irreducible factors
/// (reversed(B) = epsilon B), C the cofactor carrying content and sign.
struct SelfReciprocalSplit {
  IntPoly B;
  IntPoly C;
  long shift = 0;
  int epsilon = 1;
};

SelfReciprocalSplit split_self_reciprocal(const LaurentPoly& A);

/// Sum of fourth powers of the roots of F_{s+1}.
Integer compute_K(TranslateSequence& seq, long s);

/// Product of the primes <= 2 (number of monomials of C).
std::uint64_t compute_L(const IntPoly& C);

/// Order m of a root of unity that is a root of H_n exactly for
/// n = residue (mod period).
struct RootOrder {
  std::uint64_t order = 0;
  std::uint64_t period = 0;
  std::uint64_t residue = 0;
  unsigned multiplicity = 1;
};

struct RootOrderSet {
  std::vector<RootOrder> orders;
  std::uint64_t ell = 1;
  std::uint64_t L = 1;
  std::size_t candidates = 0;
};

/// H_n(t) = t^beta C(t) - epsilon t^c C(1/t), beta = 2(n - shift) + deg B + deg C.
IntPoly H_poly(const SelfReciprocalSplit& split, long n);

RootOrderSet compute_S_and_ell(const SelfReciprocalSplit& split);

struct RValues {
  std::uint64_t r1 = 0;
  std::uint64_t r2 = 0;
  std::uint64_t r3 = 0;
  std::uint64_t r4 = 0;
};

RValues compute_r_values(const LaurentPoly& A, const SelfReciprocalSplit& split, const RootOrderSet& S);

/// A(t) = t - D(1/t) with D having non-negative coefficients.
bool is_salem_vine(const LaurentPoly& A);

/// (t + 1/t)^2 < 9 for the largest real root t of A; reports the bound.
struct GuardResult {
  bool passed = false;
  double limit_norm_squared = 0;
};
GuardResult r3_guard(const LaurentPoly& A);

struct VineProfile {
  std::string label;
  std::string graph;
  long size = 0;
  LaurentPoly A;
  long s = 0;
  Integer K;
  SelfReciprocalSplit split;
  std::uint64_t L = 0;
  std::vector<RootOrder> S;
  std::uint64_t ell = 1;
  RValues r;
  std::uint64_t Rbound = 0;
  Integer N;
  bool salem = false;
  GuardResult guard;
  /// Certified n for the derivative bound (non-Salem vines only).
  std::optional<long> dBound;
  std::optional<BoundCertificate> dCertificate;
  /// Smallest certified n found by scanning upward from s + 1.
  std::optional<long> dMinimal;
};

struct ProfileOptions {
  long derivative_n = 200;
  long derivative_escalation_cap = 400;
  bool scan_minimal_d = true;
};

VineProfile analyze_vine(const Bigraph& g, const ProfileOptions& options = {});

}  // namespace vines
