#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "pfse/measmatrix.hpp"
#include "pfse/network.hpp"
#include "pfse/rng.hpp"
#include "pfse/types.hpp"

namespace pfse {

struct MeasurementRecord {
  MeasKind kind = MeasKind::Vmag2;
  Location location;
  double z = 0.0;
  double sigma = 0.0;
  double weight = 1.0;
};

/// Typed measurement/specification set. `records` and `matrices` are
/// index-aligned; immutable once built, so it can be shared across
/// Monte-Carlo workers.
struct MeasurementSet {
  std::vector<MeasurementRecord> records;
  std::vector<HermitianMeasurementMatrix> matrices;
  int n_buses = 0;
  int slack_index = 0;

  int size() const { return static_cast<int>(records.size()); }
};

/// A sampled true state. The slack-bus angle is exactly 0.
struct GroundTruth {
  VecC v;
  std::uint64_t rng_seed = 0;
};

/// |V_n| ~ U[lo, hi] i.i.d., theta_n ~ U[-theta_max, theta_max] i.i.d.
/// except the slack angle which is pinned to 0.
GroundTruth random_state(const Network& net, double theta_max,
                         std::pair<double, double> vmag_range, SplitRng& rng);

/// The classical power-flow specification: slack contributes {Vmag2}, each
/// PV bus {Pinj, Vmag2}, each PQ bus {Pinj, Qinj}; L = 2N-1. Values are
/// exact (sigma 0), weights 1.
MeasurementSet classical_pf_spec(const Network& net, const AdmittanceMatrix& y,
                                 const GroundTruth& truth);

/// Every location of each of the first k kinds in the fixed order
/// {|V|^2, P^f, P^t, Q^f, Q^t, P_n, Q_n}; 1 <= k <= 7.
MeasurementSet type_prefix_spec(const Network& net, const AdmittanceMatrix& y,
                                const GroundTruth& truth, int k);

/// Noiseless set over an explicit (kind, location) list.
MeasurementSet explicit_spec(const Network& net, const AdmittanceMatrix& y,
                             const GroundTruth& truth,
                             const std::vector<std::pair<MeasKind, Location>>& list);

/// Per-kind noise levels for add_awgn. Missing kinds keep sigma 0.
using NoiseSigmas = std::map<MeasKind, double>;

/// Adds independent N(0, sigma_kind^2) noise to every record and switches the
/// weights to 1/sigma^2 (capped at 1e8 for sigma = 0 records).
MeasurementSet add_awgn(const MeasurementSet& set, const NoiseSigmas& sigmas, SplitRng& rng);

}  // namespace pfse
