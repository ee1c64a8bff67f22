#pragma once

#include <Eigen/Dense>

#include <string>
#include <variant>
#include <vector>

#include "fejer/errors.hpp"

namespace fejer {

using Vec = Eigen::VectorXd;

/// Membership tolerance used by every "x lies in the set" style check.
inline constexpr double kFeasTol = 1e-9;
/// Target relative accuracy of the closed-form projections.
inline constexpr double kProjTol = 1e-12;
/// Numeric slack added to strict inequalities inside the checkers, separating
/// floating-point noise from genuine violations at the 1/(k+1) scales tested.
inline constexpr double kSlack = 1e-9;

/// {x : <normal, x> <= offset}. Rejects a degenerate normal at construction.
struct HalfSpace {
  Vec normal;
  double offset;
  HalfSpace(Vec a, double beta);
};

/// {x : <normal, x> = offset}.
struct Hyperplane {
  Vec normal;
  double offset;
  Hyperplane(Vec a, double beta);
};

/// Closed Euclidean ball.
struct Ball {
  Vec center;
  double radius;
  Ball(Vec c, double r);
};

/// Axis-aligned box [lo, hi], lo <= hi coordinatewise.
struct Box {
  Vec lo, hi;
  Box(Vec lo, Vec hi);
};

/// Affine subspace offset + span(basis). The basis is orthonormalized by
/// Gram-Schmidt at construction so projection is a plain inner-product sweep.
struct AffineSubspace {
  Eigen::MatrixXd basis;  // columns, orthonormal
  Vec offset;
  AffineSubspace(Eigen::MatrixXd raw_basis, Vec offset);
};

using ConvexSet = std::variant<HalfSpace, Hyperplane, Ball, Box, AffineSubspace>;

std::size_t dimension(const ConvexSet& set);
std::string set_kind(const ConvexSet& set);

/// Exact metric projection onto the set. Throws DimensionError on mismatch.
Vec project(const ConvexSet& set, const Vec& x);

/// ||x - project(set, x)||.
double dist(const ConvexSet& set, const Vec& x);

/// dist(set, x) <= tol.
bool contains(const ConvexSet& set, const Vec& x, double tol = kFeasTol);

void check_dimension(const ConvexSet& set, const Vec& x);
bool all_finite(const Vec& v);

}  // namespace fejer
