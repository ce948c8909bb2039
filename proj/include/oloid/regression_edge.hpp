#pragma once

// Edge of regression R of the extended oloid.
//
// R is where the family members osculate the surface: along the ruling at
// angle t the contact point of Q_lambda is on R exactly when
// lambda = (1 + 2 cos t) / ((2 + cos t) cos t). R can therefore be traced
// either by the ruling angle t or by the family parameter lambda; both forms
// are provided and tested against each other.

#include <array>

#include "oloid/geometry.hpp"

namespace oloid::regression {

// The family parameter whose touching curve meets R on the ruling at t.
// t is taken in [-2pi/3, 2pi/3] (after normalization). Throws PoleError at
// cos t = 0 and DomainError outside the interval.
double osculating_lambda(double t);

enum class Side { Neg, Pos };

// Inverse of osculating_lambda on (-2pi/3, 0) (Neg) or (0, 2pi/3) (Pos).
// Throws DomainError for lambda in [0, 1].
double osculating_angle(double lambda, Side side);

// sgn(lambda) * sqrt(1 - lambda + lambda^2); lambda outside [0, 1].
double signed_root(double lambda);

// Point of R on the ruling at angle t, on the given z-branch.
// Throws PoleError for cos t in {0, -1}, DomainError for 1 + 2 cos t < 0.
Point3 point_at_angle(double t, ZBranch zb);

// Mirror signs selecting one of the four symmetric arcs of R.
struct QuadrantSigns {
    int sx = 1;
    int sz = 1;
};

// Point of R where the touching curve of Q_lambda meets it:
// (sx * r1, r2, sz * r3). Throws DomainError for lambda in [0, 1].
Point3 point_at_lambda(double lambda, QuadrantSigns q = {});

// The four asymptotes of R (k = 1..4); these are the rulings at t = -+pi/2.
Line3 asymptote(int k);

// Pairwise intersections S12, S23, S34, S41 of consecutive asymptotes.
std::array<Point3, 4> asymptote_intersections();

// The cusps (sqrt3/2, 0, 0), (-sqrt3/2, 0, 0), (0, 0, sqrt3/2), (0, 0, -sqrt3/2).
std::array<Point3, 4> cusps();

}  // namespace oloid::regression
