#include "pfse/measurement.hpp"

#include <cmath>
#include <stdexcept>

namespace pfse {

namespace {

constexpr double kZeroSigmaWeight = 1e8;

void append(MeasurementSet& set, const Network& net, const AdmittanceMatrix& y, MeasKind kind,
            Location loc, const VecC& truth) {
  HermitianMeasurementMatrix h = measurement_matrix(net, y, kind, loc);
  MeasurementRecord rec;
  rec.kind = kind;
  rec.location = loc;
  rec.z = evaluate(h, truth);
  rec.sigma = 0.0;
  rec.weight = 1.0;
  set.records.push_back(rec);
  set.matrices.push_back(std::move(h));
}

}  // namespace

GroundTruth random_state(const Network& net, double theta_max,
                         std::pair<double, double> vmag_range, SplitRng& rng) {
  const auto [lo, hi] = vmag_range;
  if (!(lo <= hi) || lo < 0.0)
    throw std::invalid_argument("random_state: invalid voltage magnitude range");
  if (theta_max < 0.0 || theta_max > 3.14159265358979323846)
    throw std::invalid_argument("random_state: theta_max outside [0, pi]");

  GroundTruth out;
  out.v.resize(net.n_buses());
  for (int i = 0; i < net.n_buses(); ++i) {
    const double mag = rng.uniform(lo, hi);
    const double ang = i == net.slack_index() ? 0.0 : rng.uniform(-theta_max, theta_max);
    out.v[i] = std::polar(mag, ang);
  }
  return out;
}

MeasurementSet classical_pf_spec(const Network& net, const AdmittanceMatrix& y,
                                 const GroundTruth& truth) {
  MeasurementSet set;
  set.n_buses = net.n_buses();
  set.slack_index = net.slack_index();
  for (const Bus& bus : net.buses()) {
    const Location loc{bus.id, 0};
    switch (bus.kind) {
      case BusKind::Slack:
        append(set, net, y, MeasKind::Vmag2, loc, truth.v);
        break;
      case BusKind::PV:
        append(set, net, y, MeasKind::Pinj, loc, truth.v);
        append(set, net, y, MeasKind::Vmag2, loc, truth.v);
        break;
      case BusKind::PQ:
        append(set, net, y, MeasKind::Pinj, loc, truth.v);
        append(set, net, y, MeasKind::Qinj, loc, truth.v);
        break;
    }
  }
  return set;
}

MeasurementSet type_prefix_spec(const Network& net, const AdmittanceMatrix& y,
                                const GroundTruth& truth, int k) {
  if (k < 1 || k > 7) throw std::invalid_argument("type_prefix_spec: k must be in 1..7");
  MeasurementSet set;
  set.n_buses = net.n_buses();
  set.slack_index = net.slack_index();
  for (int t = 0; t < k; ++t) {
    const MeasKind kind = kTypePrefixOrder[t];
    if (is_bus_kind(kind)) {
      for (const Bus& bus : net.buses()) append(set, net, y, kind, Location{bus.id, 0}, truth.v);
    } else {
      for (const Branch& br : net.branches())
        append(set, net, y, kind, Location{br.from_bus, br.to_bus}, truth.v);
    }
  }
  return set;
}

MeasurementSet explicit_spec(const Network& net, const AdmittanceMatrix& y,
                             const GroundTruth& truth,
                             const std::vector<std::pair<MeasKind, Location>>& list) {
  if (list.empty()) throw std::invalid_argument("explicit_spec: empty measurement list");
  MeasurementSet set;
  set.n_buses = net.n_buses();
  set.slack_index = net.slack_index();
  for (const auto& [kind, loc] : list) append(set, net, y, kind, loc, truth.v);
  return set;
}

MeasurementSet add_awgn(const MeasurementSet& set, const NoiseSigmas& sigmas, SplitRng& rng) {
  const auto sigma_of = [&sigmas](MeasKind kind) {
    auto it = sigmas.find(kind);
    const double sigma = it == sigmas.end() ? 0.0 : it->second;
    if (sigma < 0.0) throw std::invalid_argument("add_awgn: negative sigma");
    return sigma;
  };

  bool any_noise = false;
  for (const auto& rec : set.records) any_noise = any_noise || sigma_of(rec.kind) > 0.0;
  if (!any_noise) return set;  // all sigmas zero: identity

  MeasurementSet out = set;
  for (auto& rec : out.records) {
    const double sigma = sigma_of(rec.kind);
    rec.sigma = sigma;
    if (sigma > 0.0) {
      rec.z += rng.normal(0.0, sigma);
      rec.weight = 1.0 / (sigma * sigma);
    } else {
      // sigma = 0 in an otherwise noisy set: finite stand-in for 1/sigma^2.
      rec.weight = kZeroSigmaWeight;
    }
  }
  return out;
}

}  // namespace pfse
