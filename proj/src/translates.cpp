#include "vines/translates.hpp"

namespace vines {

TranslateSequence::TranslateSequence(Bigraph base)
    : base_(std::move(base)), base_size_(static_cast<long>(base_.vertex_count())) {
  P_[base_size_] = char_poly(base_);
  P_[base_size_ + 1] = char_poly(translate(base_, 1));
}

const IntPoly& TranslateSequence::P(long n) {
  auto it = P_.find(n);
  if (it != P_.end()) return it->second;
  const IntPoly x = IntPoly::x();
  if (n > base_size_ + 1) {
    long k = P_.rbegin()->first;
    while (k < n) {
      IntPoly next = x * P_.at(k) - P_.at(k - 1);
      P_[k + 1] = std::move(next);
      ++k;
    }
  } else {
    long k = P_.begin()->first;
    while (k > n) {
      // P_{k-1} = x P_k - P_{k+1}
      IntPoly prev = x * P_.at(k) - P_.at(k + 1);
      P_[k - 1] = std::move(prev);
      --k;
    }
  }
  return P_.at(n);
}

LaurentPoly TranslateSequence::F(long n) { return to_laurent_F(P(n)); }

const IntPoly& TranslateSequence::f(long n) {
  auto it = f_.find(n);
  if (it != f_.end()) return it->second;
  // f_n = (t^2 + 1) f_{n-1} - t^2 f_{n-2}, seeded directly where needed.
  auto direct = [&](long k) {
    LaurentPoly F = to_laurent_F(P(k));
    return F.body().shifted(static_cast<std::size_t>(F.low() + k));
  };
  if (f_.count(n - 1) && f_.count(n - 2)) {
    const IntPoly t2p1{1, 0, 1};
    f_[n] = t2p1 * f_.at(n - 1) - f_.at(n - 2).shifted(2);
  } else {
    f_[n] = direct(n);
  }
  return f_.at(n);
}

}  // namespace vines
