#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rhoplane/norm.hpp"
#include "rhoplane/polygon.hpp"

namespace rhoplane {

/// Aggregate midpoint-support verdict over sampled chords [u, u*].
struct PropertyReport {
  std::string spec_id;
  double rho = 0.0;
  int samples = 0;            ///< uniform grid size (the 8 axis/diagonal angles come on top)
  int evaluated = 0;          ///< chords actually checked
  double max_midpoint_deviation = 0.0;
  double worst_theta = 0.0;
  double tol = 0.0;
  bool pass = false;
  std::string notes;
};

/// Sorted θ grid used by the checker: 2πi/samples plus kπ/4.
std::vector<double> checker_angles(int samples);

/// Midpoint deviation |‖(u+u*)/2‖ - ρ| maximized over the checker grid.
/// Per-sample solver failures are recorded in `notes`. Samples run in
/// parallel; the max is reduced in grid order.
PropertyReport check_p_rho_s(const NormSpec& spec, double rho, int samples = 256, double tol = 1e-8);

/// Single-threaded reference of check_p_rho_s; identical reports.
PropertyReport check_p_rho_s_serial(const NormSpec& spec, double rho, int samples = 256, double tol = 1e-8);

/// Sectors of B cut by a sorted set of boundary points.
struct SectorPartition {
  double rho = 0.0;
  std::vector<UnitPoint> boundary;  ///< strictly increasing θ
  std::vector<double> areas;        ///< areas[i] between boundary[i] and boundary[i+1] (cyclic)
  double spread = 0.0;
  double sum = 0.0;
};

/// Builds the partition from an unordered set of unit points.
SectorPartition make_partition(const NormSpec& spec, double rho, std::vector<UnitPoint> points,
                               int samples = 4096);

struct PuntoTolerances {
  double wedge = 1e-8;
  double sector = 1e-5;
  double partition = 1e-5;
  double identification = 1e-6;
  double area_sum = 1e-5;
};

struct PuntoReport {
  double rho = 0.0;
  double seed_theta = 0.0;
  int n = 0;
  int k = 0;
  bool forced = false;
  std::optional<MEntry> m_entry;
  std::vector<double> wedges;        ///< v_i ∧ v_{i+1}
  double wedge_spread = 0.0;
  std::vector<double> sector_areas;  ///< A(B_{v_i}^{v_{i+1}})
  double sector_spread = 0.0;
  SectorPartition partition;         ///< P_v ∪ P_{-v}, 2n sectors
  double total_area = 0.0;
  std::string pw_target;             ///< "P_-v" for odd k, "P_v" for even k
  double pw_distance = 0.0;          ///< Hausdorff distance of P_w to the target
  bool odd_vertex_count = false;
  bool equal_wedges = false;
  bool equal_sectors = false;
  bool equal_partition = false;
  bool pw_identified = false;
  bool all_pass() const {
    return odd_vertex_count && equal_wedges && equal_sectors && equal_partition && pw_identified;
  }
};

/// Equal-wedge / equal-sector / 2n-partition checks on P_v and P_{-v} for
/// ρ ∈ M. Throws DomainError if ρ is not in M (unless forced) and
/// NumericalError if P_v does not close.
PuntoReport punto_suite(const NormSpec& spec, double rho, double seed_theta, bool force = false,
                        const PuntoTolerances& tol = {}, int area_samples = 4096);

/// Residuals of the three Stieltjes identities over [α, β]:
///   ∫ μ s⊥ ∧ ds = 0,
///   ∫ s ∧ ds⊥ = [s ∧ s⊥],
///   ∫ s ∧ d(μ s⊥) = [s ∧ μ s⊥].
struct I0Residuals {
  double orthogonal_integral = 0.0;
  double perp_by_parts = 0.0;
  double mu_perp_by_parts = 0.0;
  double max() const;
};

I0Residuals i0_identities(const NormSpec& spec, double rho, double alpha, double beta, int samples = 4096);

/// Evidence for the even-n case. Records measurements only; no verdict on
/// the equal-sector claim.
struct EvenProbeRecord {
  int k = 0;
  int n = 0;
  double rho = 0.0;
  double seed_theta = 0.0;
  PolygonStatus pv_status = PolygonStatus::NonClosing;
  int pv_vertices = 0;
  int pv_winding = 0;
  PolygonStatus pw_status = PolygonStatus::NonClosing;
  int pw_vertices = 0;
  double symmetry_distance = -1.0;    ///< Hausdorff distance between P_v and -P_v
  double pv_pw_min_distance = -1.0;   ///< min distance between P_v and P_w
  std::optional<SectorPartition> partition;  ///< 2n sectors of P_v ∪ P_w when both close
  std::string notes;
};

EvenProbeRecord even_probe(const NormSpec& spec, int k, int n, double seed_theta, int area_samples = 4096);

struct SweepCell {
  std::string spec_id;
  bool inner_product = false;
  double rho = 0.0;
  std::optional<PropertyReport> report;
  std::string error;
};

/// Spec-major, ρ-minor grid of reports. Cells are evaluated concurrently.
std::vector<SweepCell> sweep(const std::vector<NormSpec>& specs, const std::vector<double>& rhos, int samples = 256,
                             double tol = 1e-8);

/// True iff some inner-product cell failed or errored.
bool sweep_has_ips_failure(const std::vector<SweepCell>& cells);

}  // namespace rhoplane
