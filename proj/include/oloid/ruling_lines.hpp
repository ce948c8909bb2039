#pragma once

// Lines shared by the ruled members of the family and the extended oloid.

#include <array>

#include "oloid/geometry.hpp"

namespace oloid::rulings {

// Angle of the first shared ruling, arccos((1 - lambda + rho) / lambda) with
// rho = sgn(lambda) sqrt(1 - lambda + lambda^2). The line itself sits at
// -contact_angle on the upper family. Throws DomainError for lambda in [0, 1].
double contact_angle(double lambda);

// The four common lines G1..G4 (index 0..3). Each line is parametrized by
// the ruling parameter m: base at m = 0, direction to m = 1. G2 is the
// x-mirror of G1, G3 the half-turn about the y axis, G4 the z-mirror.
// Throws DomainError for lambda in [0, 1].
std::array<Line3, 4> common_generators(ExtendedParam lambda);

// Ruling parameter at which G1 touches the edge of regression.
double regression_contact_parameter(double lambda);

// Points P1..P4 where the common lines touch the edge of regression and the
// touching curve.
std::array<Point3, 4> tangency_points(double lambda);

}  // namespace oloid::rulings
