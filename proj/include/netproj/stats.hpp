#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <vector>

#include <Eigen/Core>

namespace netproj {

// Ranks starting at 1; tied values share the mean of the ranks they span.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> average_ranks(
    const Eigen::MatrixBase<Derived>& values) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = values.size();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return values(a) < values(b);
  });
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> ranks(n);
  for (Eigen::Index i = 0; i < n;) {
    Eigen::Index j = i;
    while (j + 1 < n && values(order[j + 1]) == values(order[i])) ++j;
    const Scalar rank = Scalar(i + j) / Scalar(2) + Scalar(1);
    for (Eigen::Index k = i; k <= j; ++k) ranks(order[k]) = rank;
    i = j + 1;
  }
  return ranks;
}

// Pearson correlation; nullopt when either input is constant or has fewer
// than two entries.
template <typename DerivedA, typename DerivedB>
std::optional<typename DerivedA::Scalar> pearson(const Eigen::MatrixBase<DerivedA>& a,
                                                 const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  eigen_assert(a.size() == b.size());
  if (a.size() < 2) return std::nullopt;
  if ((a.array() == a(0)).all() || (b.array() == b(0)).all()) return std::nullopt;
  const auto ca = (a.array() - a.mean()).matrix().eval();
  const auto cb = (b.array() - b.mean()).matrix().eval();
  const Scalar va = ca.squaredNorm();
  const Scalar vb = cb.squaredNorm();
  if (!(va > Scalar(0)) || !(vb > Scalar(0))) return std::nullopt;
  const Scalar r = ca.dot(cb) / std::sqrt(va * vb);
  return std::clamp(r, Scalar(-1), Scalar(1));
}

template <typename DerivedA, typename DerivedB>
std::optional<typename DerivedA::Scalar> spearman(const Eigen::MatrixBase<DerivedA>& a,
                                                  const Eigen::MatrixBase<DerivedB>& b) {
  return pearson(average_ranks(a), average_ranks(b));
}

}  // namespace netproj
