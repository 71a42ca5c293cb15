#include "pfse/network.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace pfse {

std::string to_string(BusKind kind) {
  switch (kind) {
    case BusKind::Slack: return "slack";
    case BusKind::PV: return "pv";
    case BusKind::PQ: return "pq";
  }
  return "?";
}

BranchAdmittance branch_admittance(const Branch& branch) {
  const Complex y = branch.series_admittance;
  const double ratio = branch.tap_ratio == 0.0 ? 1.0 : branch.tap_ratio;
  const Complex tap = std::polar(ratio, branch.phase_shift);
  BranchAdmittance a;
  a.ytt = y + branch.shunt_to;
  a.yff = (y + branch.shunt_from) / (ratio * ratio);
  a.yft = -y / std::conj(tap);
  a.ytf = -y / tap;
  return a;
}

Network::Network(std::vector<Bus> buses, std::vector<Branch> branches, double base_mva)
    : buses_(std::move(buses)), branches_(std::move(branches)), base_mva_(base_mva) {
  if (buses_.empty()) throw std::invalid_argument("network: no buses");
  if (base_mva_ <= 0.0) throw std::invalid_argument("network: base_mva must be > 0");

  std::unordered_map<int, int> index;
  index.reserve(buses_.size());
  for (int i = 0; i < n_buses(); ++i) {
    const Bus& bus = buses_[i];
    if (!index.emplace(bus.id, i).second)
      throw std::invalid_argument("network: duplicate bus id " + std::to_string(bus.id));
    if (bus.kind == BusKind::Slack) {
      if (slack_index_ >= 0) throw std::invalid_argument("network: more than one slack bus");
      slack_index_ = i;
    }
  }
  if (slack_index_ < 0) throw std::invalid_argument("network: no slack bus");

  endpoints_.reserve(branches_.size());
  for (const Branch& br : branches_) {
    auto f = index.find(br.from_bus);
    auto t = index.find(br.to_bus);
    if (f == index.end() || t == index.end())
      throw std::invalid_argument("network: branch " + std::to_string(br.from_bus) + "-" +
                                  std::to_string(br.to_bus) + " references unknown bus");
    if (br.from_bus == br.to_bus)
      throw std::invalid_argument("network: branch with identical endpoints at bus " +
                                  std::to_string(br.from_bus));
    const double mag = std::abs(br.series_admittance);
    if (!(mag > 0.0) || !std::isfinite(mag))
      throw std::invalid_argument("network: branch " + std::to_string(br.from_bus) + "-" +
                                  std::to_string(br.to_bus) +
                                  " has zero or non-finite series admittance");
    endpoints_.emplace_back(f->second, t->second);
  }

  // Connectivity check: breadth-first search from bus 0.
  std::vector<char> seen(buses_.size(), 0);
  std::vector<std::vector<int>> adj(buses_.size());
  for (const auto& [f, t] : endpoints_) {
    adj[f].push_back(t);
    adj[t].push_back(f);
  }
  std::vector<int> queue{0};
  seen[0] = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (int nb : adj[queue[qi]]) {
      if (!seen[nb]) {
        seen[nb] = 1;
        queue.push_back(nb);
      }
    }
  }
  connected_ = queue.size() == buses_.size();
}

int Network::index_of(int external_id) const {
  for (int i = 0; i < n_buses(); ++i)
    if (buses_[i].id == external_id) return i;
  throw std::out_of_range("network: unknown bus id " + std::to_string(external_id));
}

std::pair<int, int> Network::branch_endpoints(int b) const {
  if (b < 0 || b >= static_cast<int>(branches_.size()))
    throw std::out_of_range("network: branch index out of range");
  return endpoints_[b];
}

AdmittanceMatrix build_admittance(const Network& net) {
  const int n = net.n_buses();
  std::vector<Eigen::Triplet<Complex>> trip;
  trip.reserve(net.branches().size() * 4 + n);

  for (std::size_t b = 0; b < net.branches().size(); ++b) {
    const auto [f, t] = net.branch_endpoints(static_cast<int>(b));
    const BranchAdmittance a = branch_admittance(net.branches()[b]);
    trip.emplace_back(f, f, a.yff);
    trip.emplace_back(f, t, a.yft);
    trip.emplace_back(t, f, a.ytf);
    trip.emplace_back(t, t, a.ytt);
  }
  for (int i = 0; i < n; ++i) {
    const Bus& bus = net.buses()[i];
    if (bus.shunt_g != 0.0 || bus.shunt_b != 0.0)
      trip.emplace_back(i, i, Complex(bus.shunt_g, bus.shunt_b));
  }

  AdmittanceMatrix out;
  out.y.resize(n, n);
  out.y.setFromTriplets(trip.begin(), trip.end());
  out.y.makeCompressed();
  return out;
}

}  // namespace pfse
