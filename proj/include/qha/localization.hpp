#pragma once

// Weak localization and the Toeplitz-approximating operators S_{B_r}.
//
// For a bounded S the operator
//   S_{B_r} = int_B int_{D_r(z)} <S K_z, K_w> (K_w (x) K_z) dw dz
// is a norm limit of Toeplitz operators, and for weakly localized S
//   || S - S_{B_r} || <= I_S(r) I_{S^*}(r),
// where I_S(r) = sup_z int_{D_r(z)^c} |<S K_z, K_w>| ((1 - |z|^2)/(1 - |w|^2))^beta dw.
// All kernel pairings use truncated kernel vectors, i.e. they are the exact
// pairings of the finite-rank operator P S P.

#include <iosfwd>
#include <utility>
#include <vector>

#include "qha/bergman.hpp"
#include "qha/convolution.hpp"
#include "qha/quadrature.hpp"

namespace qha {

inline constexpr double kDefaultBeta = 0.5;
inline constexpr double kConvergenceSlack = 5e-3;

/// Default sup-grid for I_S(r): 12 radii up to 0.95 (origin once) times 16 angles.
std::vector<DiskPoint> default_z_grid();

/// Lower-bound estimate of I_S(r): the maximum over z_grid of the complement integral.
///
/// The complement integral is evaluated as (whole disk) - (D_r(z)). The whole-disk part
/// uses the radial substitution s = (1 - |w|^2)^{1 - beta}, which absorbs the endpoint
/// singularity of (1 - |w|^2)^{-beta}; the D_r(z) part uses the transported rule from
/// region_nodes. Both use the orders of q.
double i_functional(const OperatorMatrix& S, double r, double beta, const std::vector<DiskPoint>& z_grid,
                    const DiskQuadrature& q);

struct LocalizationProfile {
  double beta = kDefaultBeta;
  std::vector<double> r_grid;
  std::vector<double> i_values;
  std::vector<double> i_adjoint_values;
  std::vector<double> bound_values;
};

/// Throws InvalidParameter unless r_grid is strictly increasing in [0, 1).
LocalizationProfile localization_profile(const OperatorMatrix& S, double beta, const std::vector<double>& r_grid,
                                         const std::vector<DiskPoint>& z_grid, const DiskQuadrature& q);

/// S_{B_r}: outer dz-rule on |z| < cutoff, inner rule transported onto D_r(z).
OperatorMatrix s_br(const OperatorMatrix& S, double r, const DiskQuadrature& q, double cutoff);

/// S_{B_r} with the inner region given by the global nodes with pseudo_dist < r.
OperatorMatrix s_br_filtered(const OperatorMatrix& S, double r, const DiskQuadrature& q, double cutoff);

/// S_{B_r^c}: inner region = global nodes with pseudo_dist >= r.
OperatorMatrix s_complement_filtered(const OperatorMatrix& S, double r, const DiskQuadrature& q, double cutoff);

/// S_G: inner region = every global node. Equals s_br_filtered + s_complement_filtered
/// on the same node partition.
OperatorMatrix s_g(const OperatorMatrix& S, const DiskQuadrature& q, double cutoff);

/// S_{B_r} = int_{|z|<r} a_{S,z} * Phi_z d lambda(z), with a_{S,z}(h) = <alpha_{h^{-1}}(S) 1, k_z>
/// and Phi_z = k_z (x) 1. The outer z-rule uses the orders of `outer` on |z| < r; the
/// convolution runs over the group rule gq restricted to |h.0| < cutoff. Throws
/// NumericalError if |a_{S,z}(h)| exceeds ||S|| at a node.
OperatorMatrix s_br_via_convolutions(const OperatorMatrix& S, double r, const GroupQuadrature& gq, double cutoff,
                                     const DiskQuadrature& outer = DiskQuadrature(16, 64));

/// Both sides of || a_{S,g} * Phi_g - a_{S,h} * Phi_h || <= 2 ||S|| || pi(g)1 - pi(h)1 ||.
/// The right side uses the untruncated vectors pi(g)1.
std::pair<double, double> continuity_modulus_check(const OperatorMatrix& S, const GroupElement& g,
                                                   const GroupElement& h, const GroupQuadrature& gq, double cutoff);

/// Both sides of || S_{B_r} || <= ||S|| mu_G(B_r), with mu_G(B_r) = r^2 / (1 - r^2).
std::pair<double, double> finite_measure_check(const OperatorMatrix& S, double r, const DiskQuadrature& q,
                                               double cutoff);

struct ConvergenceRow {
  double r = 0.0;
  double err_opnorm = 0.0;  // || S - s_br(S, r) ||
  double i_s = 0.0;
  double i_sstar = 0.0;
  double bound = 0.0;  // i_s * i_sstar
  bool bound_ok = false;  // err_opnorm <= bound + kConvergenceSlack
};

using ConvergenceTable = std::vector<ConvergenceRow>;

/// One row per r of the profile.
ConvergenceTable convergence_experiment(const OperatorMatrix& S, const LocalizationProfile& profile,
                                        const DiskQuadrature& q, double cutoff);

/// Header "r,err_opnorm,i_s,i_sstar,bound,bound_ok" then one line per row, 17 significant digits.
void write_csv(std::ostream& os, const ConvergenceTable& table);

}  // namespace qha
