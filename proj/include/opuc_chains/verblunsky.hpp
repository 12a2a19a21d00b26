#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "scalar.hpp"

namespace opuc {

/// alpha_0 .. alpha_{N-1}, every entry strictly inside the unit disk.
///
/// Convention used throughout the library: alpha_{n-1} = -conj(Phi_n(0)),
/// so Phi_n = z Phi_{n-1} - conj(alpha_{n-1}) Phi*_{n-1}.
class VerblunskySequence {
 public:
  VerblunskySequence() = default;
  explicit VerblunskySequence(std::vector<Complex> alpha) : alpha_(std::move(alpha)) {
    for (std::size_t k = 0; k < alpha_.size(); ++k) {
      if (!(std::abs(alpha_[k]) < 1.0)) {
        throw DomainError("Verblunsky coefficient " + std::to_string(k) + " has modulus >= 1");
      }
    }
  }

  std::size_t size() const { return alpha_.size(); }
  bool empty() const { return alpha_.empty(); }
  const Complex& operator[](std::size_t k) const { return alpha_[k]; }
  const std::vector<Complex>& values() const { return alpha_; }

  VerblunskySequence prefix(std::size_t n) const {
    return VerblunskySequence(std::vector<Complex>(alpha_.begin(), alpha_.begin() + static_cast<std::ptrdiff_t>(std::min(n, alpha_.size()))));
  }

 private:
  std::vector<Complex> alpha_;
};

inline double max_abs_diff(const VerblunskySequence& a, const VerblunskySequence& b) {
  double m = 0.0;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t k = 0; k < n; ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

}  // namespace opuc
