#pragma once

#include "whvi/solvers.hpp"
#include "whvi/verdict.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace whvi {

struct CheckerConfig {
  std::vector<double> ray_radii{1e1, 1e2, 1e3, 1e4, 1e5, 1e6};
  int direction_count = 16;
  double tol = 1e-8;
  double align_tol = 1e-3;
  std::uint64_t seed = 42;
  int sample_count = 64;
  double sample_radius = 10.0;
  int descent_starts = 50;
  int descent_max_iter = 200;
  int shifted_rays = 3;           ///< extra ray origins drawn from the set itself
  double growth_exponent = 0.5;   ///< natural residual must outgrow R^growth_exponent
  double oracle_pitch = 0.05;     ///< grid used by the recession-solution oracle (n <= 3)
  double oracle_radius = 2.0;

  bool operator==(const CheckerConfig&) const = default;
};

/// Throws PreconditionError unless the radii increase strictly and the counts are positive.
void validate(const CheckerConfig& cfg);

/// g(x) = <psi(x) - psi(0), x> >= 0 on D.
Verdict check_copositivity(const WeaklyHomogeneousMap& psi, const Polyhedron& D,
                           const CheckerConfig& cfg);

/// No c > 0 with -x = c (f(x) - f^inf(x)) for x in K far out, probed along rays x0 + R d with
/// d in K^inf. A ray counts against the condition only when the alignment persists over the
/// upper half of the radius grid and -x lies in K.
Verdict check_ray_alignment(const WeaklyHomogeneousMap& m, const Polyhedron& K,
                            const CheckerConfig& cfg);

/// ||F^nat|| grows without bound along rays (monotone over the upper half of the grid and
/// above v0 (R/R0)^growth_exponent).
Verdict check_natmap_growth(const WeaklyHomogeneousMap& m, const Polyhedron& K,
                            const CheckerConfig& cfg);

/// ||f - f^inf|| <= (1 + tol) ||F^nat|| for radii at or beyond the median.
Verdict check_remainder_dominated(const WeaklyHomogeneousMap& m, const Polyhedron& K,
                                  const CheckerConfig& cfg);

/// Conjunction of the two checks above.
Verdict check_natmap_coercivity(const WeaklyHomogeneousMap& m, const Polyhedron& K,
                                const CheckerConfig& cfg);

/// SOL(f^inf, K^inf) = {0}: multistart enumeration plus, for n <= 3, the grid oracle.
/// A violation carries a unit-norm validated solution as witness.
Verdict check_recession_sol_zero(const WeaklyHomogeneousMap& m, const Polyhedron& K,
                                 const SolveConfig& solver, const CheckerConfig& cfg);

/// Copositivity of f^inf on K^inf together with SOL(f^inf, K^inf) = {0}, which gives a
/// nonempty compact solution set.
Verdict check_recession_branch(const WeaklyHomogeneousMap& m, const Polyhedron& K,
                               const SolveConfig& solver, const CheckerConfig& cfg);

/// <x, f(x) - f(0)> >= 0 on the cone K and ||F^nat|| -> inf.
/// Throws PreconditionError when K is not a cone.
Verdict check_q_copositive_coercive(const WeaklyHomogeneousMap& m, const Polyhedron& K,
                                    const CheckerConfig& cfg);

/// <f(x), x - xref> >= c ||x||^xi along rays. Throws PreconditionError when xref is not in K.
Verdict check_coercivity_vi(const WeaklyHomogeneousMap& m, const Polyhedron& K,
                            const Vector& xref, const CheckerConfig& cfg);

/// x in C, y in C*, <x, y> = 0 implies <f(x), y> <= 0. The witness is x, witness_dual is y.
/// Throws PreconditionError when C is not a cone.
Verdict check_z_property(const WeaklyHomogeneousMap& m, const Polyhedron& C,
                         const CheckerConfig& cfg);

struct ReportCell {
  std::string condition;
  Verdict verdict;
};

struct ReportRow {
  std::string result;        ///< short identifier of the existence result
  std::string description;
  bool applicable = true;    ///< false when the result's setting does not cover the instance
  std::string reason;        ///< why it is not applicable
  Verdict overall;
  std::vector<ReportCell> cells;
};

struct TheoremReport {
  std::vector<ReportRow> rows;
  const ReportRow* find(std::string_view result) const;
};

/// Identifiers of the report rows.
inline constexpr std::string_view kNatmapExistence = "natmap_existence";
inline constexpr std::string_view kQCopositive = "q_copositive_cp";
inline constexpr std::string_view kRecessionBranch = "recession_branch";
inline constexpr std::string_view kCoerciveVi = "coercive_vi";

/// Runs every checker and arranges the verdicts by existence result. `xref` defaults to
/// Pi_K(0).
TheoremReport theorem_report(const WeaklyHomogeneousMap& m, const Polyhedron& K,
                             const std::optional<Vector>& xref, const CheckerConfig& cfg,
                             const SolveConfig& solver);

}  // namespace whvi
