#pragma once

#include <array>
#include <optional>
#include <variant>

#include "mainprob/gravity.hpp"

namespace mainprob {

/// Which layer of the normalization a Delaunay state belongs to:
/// osculating (original), after elimination of the parallax (prime), or
/// after the Delaunay normalization (double prime).
enum class Stage { Original, Prime, DoublePrime };

enum class AnomalyKind { Mean, Eccentric, True };

struct DelaunayState {
  Stage stage = Stage::Original;
  double ell = 0, g = 0, h = 0;  // angles, wrapped to (-pi, pi]
  double L = 0, G = 0, H = 0;    // L > 0, |H| <= G <= L
};

/// Classical elements; angles in radians.
struct KeplerianElements {
  double a = 0, e = 0, inc = 0, raan = 0, argp = 0, anomaly = 0;
  AnomalyKind kind = AnomalyKind::Mean;
};

/// Polar-nodal (Hill) variables: radius, argument of latitude, node, radial
/// velocity, total and polar angular momentum.
struct PolarNodalState {
  double r = 0, theta = 0, nu = 0;
  double R = 0, Theta = 0, N = 0;
};

/// Semi-equinoctial variables (F = ell + g, C = e cos g, S = e sin g),
/// regular for circular orbits.
struct SemiEquinoctialState {
  double F = 0, C = 0, S = 0;
  double L = 0, h = 0, H = 0;
};

struct CartesianState {
  std::array<double, 3> position{};  // km
  std::array<double, 3> velocity{};  // km/s
};

enum class Chart { Delaunay, Keplerian, PolarNodal, SemiEquinoctial, Cartesian };

using OrbitState = std::variant<DelaunayState, KeplerianElements, PolarNodalState,
                                SemiEquinoctialState, CartesianState>;

Chart chart_of(const OrbitState& state);

/// Converts between charts. Delaunay and Keplerian targets need a defined
/// node and perigee; below e = 1e-9 the argument of perigee is set to zero and
/// the anomaly absorbs it. Equatorial orbits (sin I = 0) raise SingularChart
/// for targets that carry the node angle.
OrbitState convert(const OrbitState& state, Chart target, const GravityField& field);

DelaunayState to_delaunay(const OrbitState& state, const GravityField& field,
                          Stage stage = Stage::Original);
KeplerianElements to_keplerian(const OrbitState& state, const GravityField& field,
                               AnomalyKind kind = AnomalyKind::Mean);
PolarNodalState to_polar_nodal(const OrbitState& state, const GravityField& field);
SemiEquinoctialState to_semi_equinoctial(const OrbitState& state,
                                         const GravityField& field);
CartesianState to_cartesian(const OrbitState& state, const GravityField& field);

/// Basis functions of the theory, each with its gradient with respect to
/// the Delaunay variables (ell, g, h, L, G, H).
enum class BasisFunction { a, e, eta, p, s, c, r, f, E, phi, beta, n };
inline constexpr int kBasisCount = 12;

struct PartialsRow {
  double value = 0;
  std::array<double, 6> gradient{};
  bool valid = true;
};

class PartialsTable {
 public:
  std::array<PartialsRow, kBasisCount> rows{};

  /// Row accessor; throws DegeneratePartials for rows that diverge at e -> 0
  /// when the state has e < 1e-9.
  const PartialsRow& row(BasisFunction which) const;
};

/// Closed-form first partials of the basis functions at a Delaunay state.
PartialsTable partials_at(const DelaunayState& state, const GravityField& field);

/// Energy of the main problem at a Cartesian state.
double main_problem_energy(const CartesianState& state, const GravityField& field);

}  // namespace mainprob
