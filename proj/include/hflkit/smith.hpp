#ifndef HFLKIT_SMITH_HPP
#define HFLKIT_SMITH_HPP

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <utility>
#include <vector>

#include "hflkit/int_matrix.hpp"

namespace hflkit {

/// U * A * V = D with U, V unimodular and D in Smith normal form.
template <typename Scalar>
struct SmithDecomposition {
  Matrix<Scalar> U;
  Matrix<Scalar> D;
  Matrix<Scalar> V;

  /// Number of nonzero diagonal entries.
  Eigen::Index rank() const {
    Eigen::Index r = 0;
    const Eigen::Index k = std::min(D.rows(), D.cols());
    while (r < k && D(r, r) != 0) ++r;
    return r;
  }

  /// Nonzero diagonal entries d_1 | d_2 | ... | d_r.
  std::vector<Scalar> invariant_factors() const {
    std::vector<Scalar> out;
    for (Eigen::Index i = 0; i < rank(); ++i) out.push_back(D(i, i));
    return out;
  }
};

namespace detail {

template <typename Scalar>
Scalar magnitude(const Scalar& x) {
  using std::abs;
  return Scalar(abs(x));
}

// Position of the nonzero entry of least magnitude in D[t:, t:].
template <typename Scalar>
std::optional<std::pair<Eigen::Index, Eigen::Index>> min_pivot(const Matrix<Scalar>& D, Eigen::Index t) {
  std::optional<std::pair<Eigen::Index, Eigen::Index>> best;
  Scalar best_mag = 0;
  for (Eigen::Index j = t; j < D.cols(); ++j) {
    for (Eigen::Index i = t; i < D.rows(); ++i) {
      if (D(i, j) == 0) continue;
      Scalar mag = magnitude(D(i, j));
      if (!best || mag < best_mag) {
        best = {i, j};
        best_mag = mag;
        if (best_mag == 1) return best;
      }
    }
  }
  return best;
}

template <typename Scalar>
void add_row_multiple(Matrix<Scalar>& M, Eigen::Index dst, Eigen::Index src, const Scalar& factor) {
  for (Eigen::Index c = 0; c < M.cols(); ++c) M(dst, c) += factor * M(src, c);
}

template <typename Scalar>
void add_col_multiple(Matrix<Scalar>& M, Eigen::Index dst, Eigen::Index src, const Scalar& factor) {
  for (Eigen::Index r = 0; r < M.rows(); ++r) M(r, dst) += factor * M(r, src);
}

}  // namespace detail

/// Smith normal form by least-magnitude pivoting.
///
/// Row operations are mirrored into U, column operations into V, so that
/// U * A * V == D holds exactly at every step.
template <typename Scalar>
SmithDecomposition<Scalar> smith_normal_form(const Matrix<Scalar>& A) {
  const Eigen::Index m = A.rows();
  const Eigen::Index n = A.cols();
  SmithDecomposition<Scalar> out{Matrix<Scalar>::Identity(m, m), A, Matrix<Scalar>::Identity(n, n)};
  Matrix<Scalar>& U = out.U;
  Matrix<Scalar>& D = out.D;
  Matrix<Scalar>& V = out.V;

  const auto swap_rows = [&](Eigen::Index a, Eigen::Index b) {
    if (a == b) return;
    D.row(a).swap(D.row(b));
    U.row(a).swap(U.row(b));
  };
  const auto swap_cols = [&](Eigen::Index a, Eigen::Index b) {
    if (a == b) return;
    D.col(a).swap(D.col(b));
    V.col(a).swap(V.col(b));
  };

  for (Eigen::Index t = 0; t < std::min(m, n); ++t) {
    auto pivot = detail::min_pivot(D, t);
    if (!pivot) break;
    swap_rows(t, pivot->first);
    swap_cols(t, pivot->second);

    bool settled = false;
    while (!settled) {
      bool dirty = false;

      for (Eigen::Index i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        const Scalar q = D(i, t) / D(t, t);
        detail::add_row_multiple<Scalar>(D, i, t, Scalar(-q));
        detail::add_row_multiple<Scalar>(U, i, t, Scalar(-q));
        if (D(i, t) != 0) dirty = true;
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        const Scalar q = D(t, j) / D(t, t);
        detail::add_col_multiple<Scalar>(D, j, t, Scalar(-q));
        detail::add_col_multiple<Scalar>(V, j, t, Scalar(-q));
        if (D(t, j) != 0) dirty = true;
      }

      if (dirty) {
        // A remainder smaller than the pivot survived; move it to (t, t).
        Scalar best_mag = detail::magnitude(D(t, t));
        Eigen::Index bi = t, bj = t;
        for (Eigen::Index i = t + 1; i < m; ++i) {
          if (D(i, t) != 0 && detail::magnitude(D(i, t)) < best_mag) {
            best_mag = detail::magnitude(D(i, t));
            bi = i;
            bj = t;
          }
        }
        for (Eigen::Index j = t + 1; j < n; ++j) {
          if (D(t, j) != 0 && detail::magnitude(D(t, j)) < best_mag) {
            best_mag = detail::magnitude(D(t, j));
            bi = t;
            bj = j;
          }
        }
        swap_rows(t, bi);
        swap_cols(t, bj);
        continue;
      }

      // Row and column t are clear; enforce d_t | every remaining entry.
      settled = true;
      for (Eigen::Index i = t + 1; i < m && settled; ++i) {
        for (Eigen::Index j = t + 1; j < n; ++j) {
          if (D(i, j) % D(t, t) != 0) {
            detail::add_row_multiple<Scalar>(D, t, i, Scalar(1));
            detail::add_row_multiple<Scalar>(U, t, i, Scalar(1));
            settled = false;
            break;
          }
        }
      }
    }

    if (D(t, t) < 0) {
      D.row(t) *= Scalar(-1);
      U.row(t) *= Scalar(-1);
    }
  }
  return out;
}

}  // namespace hflkit

#endif  // HFLKIT_SMITH_HPP
