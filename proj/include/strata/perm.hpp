#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "strata/error.hpp"

namespace strata {

// An affine similitude permutation of the integers, stored by its window
// (x(1), ..., x(2g)) and extended by x(i + 2g) = x(i) + 2g. The defining
// constraint is x(i) + x(2g+1-i) = 2g+1 + 2g*c for a single integer c,
// the similitude (Kottwitz) component of the element.
class AffSimPerm {
 public:
  explicit AffSimPerm(std::vector<int> window) : win_(std::move(window)) {
    validate();
  }

  static AffSimPerm identity(int g) {
    std::vector<int> w(2 * static_cast<std::size_t>(g));
    std::iota(w.begin(), w.end(), 1);
    return AffSimPerm(std::move(w));
  }

  int g() const { return static_cast<int>(win_.size()) / 2; }
  int period() const { return static_cast<int>(win_.size()); }
  const std::vector<int>& window() const { return win_; }

  // Value at any integer, using 2g-periodicity.
  long long operator()(long long i) const {
    const long long n = period();
    long long q = (i - 1) / n;
    if ((i - 1) % n < 0) --q;  // floor division
    const long long r = i - n * q;  // in 1..2g
    return win_[static_cast<std::size_t>(r - 1)] + n * q;
  }

  // (a.compose(b))(i) = a(b(i)): the right factor acts first.
  AffSimPerm compose(const AffSimPerm& rhs) const {
    if (period() != rhs.period())
      throw context_mismatch("composing permutations of different period");
    std::vector<int> w(win_.size());
    for (int i = 1; i <= period(); ++i)
      w[static_cast<std::size_t>(i - 1)] = static_cast<int>((*this)(rhs(i)));
    return AffSimPerm(std::move(w));
  }

  AffSimPerm inverse() const {
    const int n = period();
    std::vector<int> w(win_.size());
    for (int i = 1; i <= n; ++i) {
      const int v = win_[static_cast<std::size_t>(i - 1)];
      int q = (v - 1) / n;
      if ((v - 1) % n < 0) --q;
      const int r = v - n * q;  // x(i) = r + n q  =>  x^{-1}(r) = i - n q
      w[static_cast<std::size_t>(r - 1)] = i - n * q;
    }
    return AffSimPerm(std::move(w));
  }

  // Similitude component; a homomorphism onto Z with kernel W_a.
  int kappa() const {
    const int n = period();
    return (win_[0] + win_[static_cast<std::size_t>(n - 1)] - (n + 1)) / n;
  }

  bool is_identity() const {
    for (int i = 1; i <= period(); ++i)
      if (win_[static_cast<std::size_t>(i - 1)] != i) return false;
    return true;
  }

  // True iff x(i) == i mod 2g for all i, i.e. the element is a translation.
  bool is_translation() const {
    for (int i = 1; i <= period(); ++i)
      if ((win_[static_cast<std::size_t>(i - 1)] - i) % period() != 0) return false;
    return true;
  }

  // The coweight lambda with x = t^lambda; only valid on translations.
  std::vector<int> translation_coweight() const {
    std::vector<int> lam(win_.size());
    for (int i = 1; i <= period(); ++i) {
      const int d = win_[static_cast<std::size_t>(i - 1)] - i;
      if (d % period() != 0)
        throw internal_error("translation_coweight on a non-translation");
      lam[static_cast<std::size_t>(i - 1)] = d / period();
    }
    return lam;
  }

  // Number of fixed points x(i) = i in one period.
  int fixed_points() const {
    int c = 0;
    for (int i = 1; i <= period(); ++i)
      if (win_[static_cast<std::size_t>(i - 1)] == i) ++c;
    return c;
  }

  // Image of the element in the finite quotient (one-line notation on 1..2g).
  std::vector<int> finite_part() const {
    const int n = period();
    std::vector<int> p(win_.size());
    for (int i = 1; i <= n; ++i) {
      int r = win_[static_cast<std::size_t>(i - 1)] % n;
      if (r <= 0) r += n;
      p[static_cast<std::size_t>(i - 1)] = r;
    }
    return p;
  }

  int finite_order() const {
    const std::vector<int> p = finite_part();
    const int n = period();
    int order = 1;
    std::vector<bool> seen(win_.size(), false);
    for (int i = 0; i < n; ++i) {
      if (seen[static_cast<std::size_t>(i)]) continue;
      int len = 0;
      int j = i;
      while (!seen[static_cast<std::size_t>(j)]) {
        seen[static_cast<std::size_t>(j)] = true;
        j = p[static_cast<std::size_t>(j)] - 1;
        ++len;
      }
      order = static_cast<int>(std::lcm(order, len));
    }
    return order;
  }

  // Left descent at s in {0..g}: l(s*x) < l(x). For affine similitude
  // permutations this is the window test x^{-1}(s) > x^{-1}(s+1).
  bool left_descent(int s) const {
    return position_of(s) > position_of(s + 1);
  }

  // Right descent at s: l(x*s) < l(x), the test x(s) > x(s+1).
  bool right_descent(int s) const { return (*this)(s) > (*this)(s + 1); }

  friend bool operator==(const AffSimPerm& a, const AffSimPerm& b) {
    return a.win_ == b.win_;
  }
  friend bool operator!=(const AffSimPerm& a, const AffSimPerm& b) {
    return !(a == b);
  }
  friend bool operator<(const AffSimPerm& a, const AffSimPerm& b) {
    return a.win_ < b.win_;
  }

 private:
  // x^{-1}(v) without building the whole inverse.
  long long position_of(long long v) const {
    const long long n = period();
    long long q0 = (v - 1) / n;
    if ((v - 1) % n < 0) --q0;
    const long long r = v - n * q0;
    for (int i = 1; i <= n; ++i) {
      const int x = win_[static_cast<std::size_t>(i - 1)];
      if ((x - r) % n == 0) return i + (v - x);
    }
    throw internal_error("window misses residue class");
  }

  void validate() const {
    const int n = period();
    if (n == 0 || n % 2 != 0)
      throw lattice_error("window size must be 2g > 0");
    std::vector<bool> seen(win_.size(), false);
    for (int v : win_) {
      int r = v % n;
      if (r <= 0) r += n;
      if (seen[static_cast<std::size_t>(r - 1)])
        throw lattice_error("window entries collide modulo 2g");
      seen[static_cast<std::size_t>(r - 1)] = true;
    }
    const int s = win_[0] + win_[static_cast<std::size_t>(n - 1)];
    if ((s - (n + 1)) % n != 0)
      throw lattice_error("window violates the similitude constraint");
    for (int i = 1; i <= n; ++i)
      if (win_[static_cast<std::size_t>(i - 1)] +
              win_[static_cast<std::size_t>(n - i)] != s)
        throw lattice_error("window violates the similitude constraint");
  }

  std::vector<int> win_;
};

struct AffSimPermHash {
  std::size_t operator()(const AffSimPerm& p) const {
    std::size_t h = 1469598103934665603ull;
    for (int v : p.window()) {
      h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(v));
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace strata
