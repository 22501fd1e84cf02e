#pragma once

#include <cmath>
#include <functional>
#include <random>

#include <doctest.h>

#include "geophase/qcore.hpp"

namespace geophase::test {

inline double circle_distance(double a, double b) {
  return std::abs(std::remainder(a - b, 2.0 * kPi));
}

inline PureState random_state(std::mt19937_64& rng, std::size_t dim) {
  std::normal_distribution<double> g;
  CVector v(static_cast<Eigen::Index>(dim));
  for (auto& c : v) c = Complex(g(rng), g(rng));
  return PureState::normalized(v);
}

inline CMatrix random_unitary(std::mt19937_64& rng, std::size_t dim) {
  std::normal_distribution<double> g;
  const auto n = static_cast<Eigen::Index>(dim);
  CMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = Complex(g(rng), g(rng));
  Eigen::HouseholderQR<CMatrix> qr(m);
  return qr.householderQ() * CMatrix::Identity(n, n);
}

/// Checks that `f` throws geophase::Error with the given kind.
inline void check_error_kind(const std::function<void()>& f, ErrorKind kind) {
  bool thrown = false;
  try {
    f();
  } catch (const Error& e) {
    thrown = true;
    CHECK_MESSAGE(e.kind() == kind, "got kind ", to_string(e.kind()));
  }
  CHECK_MESSAGE(thrown, "expected ", to_string(kind));
}

}  // namespace geophase::test
