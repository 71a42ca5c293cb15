#include "pfse/measmatrix.hpp"

#include <stdexcept>
#include <vector>

namespace pfse {

namespace {

constexpr Complex kHalfJ{0.0, 0.5};

int find_branch(const Network& net, int m, int n) {
  for (std::size_t b = 0; b < net.branches().size(); ++b) {
    const Branch& br = net.branches()[b];
    if (br.from_bus == m && br.to_bus == n) return static_cast<int>(b);
  }
  throw std::invalid_argument("measurement: branch " + std::to_string(m) + "-" +
                              std::to_string(n) + " not present in network");
}

}  // namespace

bool is_bus_kind(MeasKind kind) {
  return kind == MeasKind::Vmag2 || kind == MeasKind::Pinj || kind == MeasKind::Qinj;
}

bool is_power_kind(MeasKind kind) { return kind != MeasKind::Vmag2; }

std::string to_string(MeasKind kind) {
  switch (kind) {
    case MeasKind::Vmag2: return "vmag2";
    case MeasKind::Pinj: return "pinj";
    case MeasKind::Qinj: return "qinj";
    case MeasKind::PflowF: return "pflow_f";
    case MeasKind::QflowF: return "qflow_f";
    case MeasKind::PflowT: return "pflow_t";
    case MeasKind::QflowT: return "qflow_t";
  }
  return "?";
}

MeasKind meas_kind_from_string(const std::string& name) {
  for (MeasKind k : kTypePrefixOrder)
    if (to_string(k) == name) return k;
  throw std::invalid_argument("measurement: unknown kind '" + name + "'");
}

HermitianMeasurementMatrix measurement_matrix(const Network& net, const AdmittanceMatrix& y,
                                              MeasKind kind, Location location) {
  const int n_buses = net.n_buses();
  std::vector<Eigen::Triplet<Complex>> trip;

  if (is_bus_kind(kind)) {
    const int n = net.index_of(location.m);
    if (kind == MeasKind::Vmag2) {
      trip.emplace_back(n, n, Complex(1.0, 0.0));
    } else {
      // H_P = (Y_n + Y_n^H)/2, H_Q = j(Y_n - Y_n^H)/2 with Y_n = e_n e_n^T Y.
      for (int col = 0; col < y.y.outerSize(); ++col) {
        for (SpMatC::InnerIterator it(y.y, col); it; ++it) {
          if (it.row() != n) continue;
          const Complex ynk = it.value();
          if (col == n) {
            trip.emplace_back(n, n,
                              kind == MeasKind::Pinj ? Complex(ynk.real(), 0.0)
                                                     : Complex(-ynk.imag(), 0.0));
          } else {
            const Complex upper = kind == MeasKind::Pinj ? 0.5 * ynk : kHalfJ * ynk;
            trip.emplace_back(n, col, upper);
            trip.emplace_back(col, n, std::conj(upper));
          }
        }
      }
    }
  } else {
    const int b = find_branch(net, location.m, location.n);
    const auto [fi, ti] = net.branch_endpoints(b);
    const BranchAdmittance a = branch_admittance(net.branches()[b]);
    const bool sending = kind == MeasKind::PflowF || kind == MeasKind::QflowF;
    const bool active = kind == MeasKind::PflowF || kind == MeasKind::PflowT;
    // Sending end: S_f = v^H B v with B = conj(yff) e_m e_m^T + conj(yft) e_n e_m^T;
    // receiving end symmetrically around the "to" bus.
    const int center = sending ? fi : ti;
    const int other = sending ? ti : fi;
    const Complex ydiag = sending ? a.yff : a.ytt;
    const Complex ycross = sending ? a.yft : a.ytf;
    if (active) {
      trip.emplace_back(center, center, Complex(ydiag.real(), 0.0));
      trip.emplace_back(center, other, 0.5 * ycross);
      trip.emplace_back(other, center, 0.5 * std::conj(ycross));
    } else {
      trip.emplace_back(center, center, Complex(-ydiag.imag(), 0.0));
      trip.emplace_back(center, other, kHalfJ * ycross);
      trip.emplace_back(other, center, std::conj(kHalfJ * ycross));
    }
  }

  HermitianMeasurementMatrix out;
  out.kind = kind;
  out.location = location;
  out.h.resize(n_buses, n_buses);
  out.h.setFromTriplets(trip.begin(), trip.end());
  out.h.makeCompressed();
  return out;
}

double evaluate(const HermitianMeasurementMatrix& h, const VecC& v) {
  if (v.size() != h.h.rows()) throw std::invalid_argument("evaluate: dimension mismatch");
  const Complex quad = v.dot(h.h * v);  // Eigen dot conjugates the left argument
  return quad.real();
}

}  // namespace pfse
