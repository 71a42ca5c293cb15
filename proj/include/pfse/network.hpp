#pragma once

#include <string>
#include <vector>

#include "pfse/types.hpp"

namespace pfse {

enum class BusKind { Slack, PV, PQ };

std::string to_string(BusKind kind);

/// Network node. `id` is the external (case file) bus number; shunts are the
/// per-unit admittance to ground at the bus.
struct Bus {
  int id = 0;
  BusKind kind = BusKind::PQ;
  double shunt_g = 0.0;
  double shunt_b = 0.0;
};

/// Transmission element between two buses, standard two-port model.
/// `tap_ratio` == 0 means a unity tap; `phase_shift` is in radians.
/// `shunt_from` / `shunt_to` are the line charging admittances attached at
/// each end (j*b/2 for a plain line).
struct Branch {
  int from_bus = 0;
  int to_bus = 0;
  Complex series_admittance{0.0, 0.0};
  Complex shunt_from{0.0, 0.0};
  Complex shunt_to{0.0, 0.0};
  double tap_ratio = 0.0;
  double phase_shift = 0.0;
};

/// Two-port admittance of one branch: I_f = yff*V_m + yft*V_n measured at the
/// sending end, I_t = ytf*V_m + ytt*V_n at the receiving end.
struct BranchAdmittance {
  Complex yff, yft, ytf, ytt;
};

BranchAdmittance branch_admittance(const Branch& branch);

/// Immutable grid model. Buses keep their external numbering; all matrix and
/// vector quantities use contiguous internal indices 0..N-1 in bus-list
/// order. Construction validates the invariants (exactly one slack bus,
/// branch endpoints present, nonzero series admittances) and records whether
/// the graph is connected (a warning condition, not an error).
class Network {
 public:
  Network(std::vector<Bus> buses, std::vector<Branch> branches, double base_mva);

  int n_buses() const { return static_cast<int>(buses_.size()); }
  const std::vector<Bus>& buses() const { return buses_; }
  const std::vector<Branch>& branches() const { return branches_; }
  double base_mva() const { return base_mva_; }
  bool connected() const { return connected_; }

  /// Internal 0-based index of an external bus number. Throws if unknown.
  int index_of(int external_id) const;
  int external_id(int internal_index) const { return buses_[internal_index].id; }
  int slack_index() const { return slack_index_; }

  /// Internal endpoint indices of branch `b`.
  std::pair<int, int> branch_endpoints(int b) const;

 private:
  std::vector<Bus> buses_;
  std::vector<Branch> branches_;
  std::vector<std::pair<int, int>> endpoints_;  // internal indices per branch
  double base_mva_ = 100.0;
  int slack_index_ = -1;
  bool connected_ = true;
};

/// Sparse bus admittance matrix, i = Y v over internal indices.
struct AdmittanceMatrix {
  SpMatC y;
};

/// Assembles Y from the branch list and bus shunts. Parallel branches are
/// admittance-summed.
AdmittanceMatrix build_admittance(const Network& net);

}  // namespace pfse
