#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "geomkit/rational.hpp"

namespace geomkit {

using RVector = std::vector<Rational>;
using RMatrix = std::vector<RVector>;

/// Affine solution space {particular + sum_i t_i * basis[i]} of an exact
/// linear system.
struct ParamSolution {
  RVector particular;
  std::vector<RVector> basis;
  std::vector<std::string> names;

  std::size_t variables() const { return particular.size(); }
  std::size_t dimension() const { return basis.size(); }
  /// Point of the space at parameter vector `t` (size == dimension()).
  RVector at(std::span<const Rational> t) const;
};

struct Infeasible {
  std::string reason;
};

using LinearResult = std::variant<ParamSolution, Infeasible>;

/// Gauss-Jordan elimination over the rationals. The basis is built from the
/// free columns of the reduced row echelon form, in column order.
LinearResult solve_linear_exact(const RMatrix& rows, const RVector& rhs,
                                std::vector<std::string> names = {});

/// True iff rows * x == rhs exactly.
bool satisfies(const RMatrix& rows, const RVector& rhs, std::span<const Rational> x);

/// Affine form a.t + c over the parameters of a ParamSolution.
struct AffineForm {
  RVector coef;
  Rational constant;

  Rational eval(std::span<const Rational> t) const;
  bool is_constant() const;
};

/// Coordinate `var` of a ParamSolution as an affine form in the parameters.
AffineForm coordinate_form(const ParamSolution& sol, std::size_t var);

/// Open polyhedron {t : f_j(t) > 0 for all j} analysed by Fourier-Motzkin
/// elimination. Emptiness is decided exactly whenever the elimination stays
/// below the constraint cap.
class StrictRegion {
 public:
  static constexpr std::size_t kDefaultConstraintCap = 200000;

  StrictRegion(std::size_t dimension, std::vector<AffineForm> constraints,
               std::size_t constraint_cap = kDefaultConstraintCap);

  std::size_t dimension() const { return dim_; }
  /// False when the elimination overflowed the cap; emptiness is then unknown.
  bool decided() const { return decided_; }
  bool empty() const { return decided_ && empty_; }

  /// A deterministic interior point (midpoints of the back-substitution
  /// intervals). Requires decided() && !empty().
  RVector interior_point() const;
  /// A randomised interior point: each back-substitution step picks a random
  /// rational position inside its open interval.
  RVector sample(std::mt19937_64& rng) const;

 private:
  RVector back_substitute(std::mt19937_64* rng) const;

  std::size_t dim_;
  bool decided_ = true;
  bool empty_ = false;
  // levels_[k] holds constraints over the first k parameters.
  std::vector<std::vector<AffineForm>> levels_;
};

enum class PositiveStatus {
  Found,        // point returned
  Empty,        // exact certificate: no point has all listed coordinates > 0
  NotFound,     // random search failed; not a certificate
  Unsupported,  // dimension above the supported limit
};

struct PositivePointOptions {
  std::size_t max_dimension = 8;
  std::size_t random_attempts = 100000;
  std::uint64_t seed = 0;
};

struct PositivePoint {
  PositiveStatus status = PositiveStatus::NotFound;
  RVector params;  // parameter vector t
  RVector point;   // full coordinate vector
};

/// Finds a rational point of the solution space whose coordinates listed in
/// `strict_positive_vars` are all > 0.
PositivePoint positive_point(const ParamSolution& sol, std::span<const std::size_t> strict_positive_vars,
                             const PositivePointOptions& opts = {});

}  // namespace geomkit
