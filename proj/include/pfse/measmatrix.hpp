#pragma once

#include <array>
#include <string>

#include "pfse/network.hpp"
#include "pfse/types.hpp"

namespace pfse {

/// The seven SCADA quantity types expressible as v^H H v.
enum class MeasKind { Vmag2, Pinj, Qinj, PflowF, QflowF, PflowT, QflowT };

/// Deterministic kind ordering used by the type-prefix measurement selector:
/// {|V|^2, P^f, P^t, Q^f, Q^t, P_n, Q_n}.
inline constexpr std::array<MeasKind, 7> kTypePrefixOrder = {
    MeasKind::Vmag2,  MeasKind::PflowF, MeasKind::PflowT, MeasKind::QflowF,
    MeasKind::QflowT, MeasKind::Pinj,   MeasKind::Qinj};

bool is_bus_kind(MeasKind kind);
bool is_power_kind(MeasKind kind);
std::string to_string(MeasKind kind);
MeasKind meas_kind_from_string(const std::string& name);

/// Where a measurement is taken: external bus number for bus kinds, ordered
/// external endpoint pair (m, n) for flow kinds (n is 0 for bus kinds).
struct Location {
  int m = 0;
  int n = 0;
};

/// Sparse Hermitian coefficient matrix H with z = v^H H v.
struct HermitianMeasurementMatrix {
  MeasKind kind = MeasKind::Vmag2;
  Location location;
  SpMatC h;
};

/// Builds the H matrix for one measurement. Flow matrices are derived from
/// S_f = V_m * conj(I_mn) (resp. S_t = V_n * conj(I_nm)) with the branch
/// two-port currents, so taps and phase shifts are handled uniformly.
HermitianMeasurementMatrix measurement_matrix(const Network& net, const AdmittanceMatrix& y,
                                              MeasKind kind, Location location);

/// v^H H v; the imaginary residue (zero up to roundoff for Hermitian H) is
/// discarded.
double evaluate(const HermitianMeasurementMatrix& h, const VecC& v);

}  // namespace pfse
