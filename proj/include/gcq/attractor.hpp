#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gcq/errors.hpp"

namespace gcq {

enum class Topology { ring, torus };

std::string to_string(Topology t);
Topology topology_from_string(const std::string& s);

// Physical constants of one continuous attractor network. Neurons sit on a
// uniform grid over (-pi, pi] per axis; the ring has N neurons, the torus N^2.
struct CannParams {
  Topology topology = Topology::ring;
  int neurons_per_axis = 16;   // N
  double tau = 1.0;            // synaptic time constant
  double density = 5.0;        // rho, neurons per unit of feature space
  double coupling = 1.0;       // J, connectivity strength
  double conn_width = 0.5;     // a, Gaussian connectivity width (radians)
  double norm_strength = 0.2;  // k, divisive normalization strength
  double dt = 0.1;             // integration step, must be < tau
  double conv_tol = 1e-6;      // relative residual counted as converged
  int max_steps = 20000;       // relaxation step budget

  int axes() const { return topology == Topology::ring ? 1 : 2; }
  int neuron_count() const;

  // 1 - 32*pi*a^2*k/(J^2*rho) on the torus; the ring analog is
  // 1 - 16*sqrt(2*pi)*pi*a^3*k/(J^2*rho). Negative means no stable bump.
  double stability_radicand() const;

  // Peak firing rate of the stationary bump. Throws StabilityViolation when
  // the radicand is negative.
  double bump_amplitude() const;

  void validate() const;  // throws ConfigError / StabilityViolation
};

// A firing-rate vector over the network's neurons. Codewords are bumps with
// a known center; relaxed or arbitrary patterns leave center_index empty.
struct BumpPattern {
  std::vector<double> values;
  std::optional<int> center_index;
};

struct NetworkState {
  std::vector<double> synaptic;  // U
  std::vector<double> rate;      // r, divisive-normalization image of U
  double time = 0.0;
};

// Per-axis bump shift vectors (difference of two bumps one action step
// apart, evaluated at a reference center). The vectors are
// position-covariant: applying `plus` to a bump centered at c means adding
// e_{c+step} - e_c, not the reference-centered difference. apply_basis
// realizes that exactly.
struct ActionBasis {
  int axis = 0;  // 0 = first torus axis / the ring axis, 1 = second axis
  int step = 1;
  double step_radians = 0.0;
  std::vector<double> plus;
  std::vector<double> minus;
  std::vector<double> stay;  // zero vector
};

// Simulates one CANN: stationary bumps, explicit-Euler dynamics, relaxation
// and template matching, and the action bases.
//
// The codeword grid has K centers. K = neuron_count() is the default; a ring
// also supports K = r*N with centers between neurons. Distances are always
// derived from wrapped integer offsets on the center grid, so patterns at
// different centers are bitwise circular rolls of each other.
//
// All methods are const and the object is immutable after construction, so
// one network can serve any number of threads. A NetworkState is advanced by
// a single owner at a time.
class CannNetwork {
 public:
  explicit CannNetwork(CannParams params, int codeword_count = -1);

  const CannParams& params() const { return params_; }
  int neuron_count() const { return d_; }
  int codeword_count() const { return codewords_; }

  // Grid-cell quadrature measure (2*pi/N)^axes. Discrete sums over neurons
  // carry this factor so they approximate the continuum integrals that the
  // amplitude formula solves; see the derivation note in attractor.cpp.
  double cell_measure() const { return cell_measure_; }

  // Dense recurrent weights, W[i*d+j] = J/(2*pi*a^2) *
  // exp(-dist(i,j)^2 / (2 a^2)) with wrapped shortest-path distances.
  // Symmetric and (block-)circulant. The dynamics use the equivalent
  // circulant kernel, not this matrix.
  std::vector<double> connectivity_matrix() const;

  // Gaussian bump of amplitude bump_amplitude() centered on codeword
  // `center`.
  BumpPattern stationary_bump(int center) const;

  // r_i = U_i^2 / (1 + k * rho_q * sum_j U_j^2), rho_q = density *
  // cell_measure. The uniform divisive pool is what makes the closed-form
  // bump an exact fixed point of the dynamics.
  std::vector<double> divisive_normalization(std::span<const double> u) const;

  // One explicit Euler step of tau dU/dt = -U + rho_q * (W r) + I.
  // Throws NonFinite if the update overflows.
  NetworkState step_dynamics(const NetworkState& state,
                             std::span<const double> input) const;

  // Applies `input` for hold_time, removes it, and integrates until the
  // one-step relative residual drops below conv_tol (at least settle_time).
  // Returns the codeword index with maximal inner product against the
  // converged firing pattern. Throws NoConvergence past max_steps.
  std::pair<int, NetworkState> relax(std::span<const double> input) const;

  // argmax_i <e_i, input>, ties resolved to the lowest index. Inner products
  // are accumulated in bump-centered component order so symmetric inputs tie
  // bitwise.
  int template_match_direct(std::span<const double> input) const;

  double codeword_inner_product(int center, std::span<const double> v) const;

  ActionBasis action_basis(int axis, int step) const;

  // Position-covariant application of a basis vector: pattern must be the
  // bump at `pattern_center`; the result is the bump at the shifted center,
  // computed as (pattern - e_center) + e_shifted so the telescoping is exact.
  std::vector<double> apply_basis(const ActionBasis& basis, bool positive,
                                  std::span<const double> pattern,
                                  int pattern_center) const;

  // Codeword index whose center is `shift` action steps along `axis`.
  int shift_center(int center, int axis, int signed_steps) const;

  // Synaptic profile consistent with the stationary bump at `center`:
  // U = rho_q * (W r_bump), r = normalization image of U.
  NetworkState state_at_bump(int center) const;

  // max_i |U_next_i - U_i| / max_i |U_i| for one Euler step with no input.
  double fixed_point_residual(const NetworkState& state) const;

  // Bump profile value at a given squared feature-space distance.
  double bump_value(double distance_sq) const;

 private:
  std::vector<double> recurrent_drive(std::span<const double> rate) const;
  // Neuron index at integer offset `off` (row-major for torus) from the
  // neuron nearest codeword `center`.
  int neuron_at_offset(int center, int off) const;
  double center_distance_sq(int center, int neuron) const;

  CannParams params_;
  int d_ = 0;          // neurons
  int codewords_ = 0;  // K
  int sub_grid_ = 1;   // K / N on the ring, 1 otherwise
  double cell_measure_ = 0.0;
  double amplitude_ = 0.0;
  std::vector<double> kernel_;  // circulant connectivity kernel, length d
};

}  // namespace gcq
