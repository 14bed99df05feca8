#pragma once

#include <vector>

#include "dicke/gaussian.hpp"
#include "dicke/linalg.hpp"
#include "dicke/model.hpp"

namespace dicke {

/// One parameter point of a protocol and the free-evolution time spent there
/// after arriving (seconds).
struct ProtocolPoint {
  DickeParams params;
  double dwell_s = 0.0;
};

/// Ordered list of sudden-quench targets. A closed protocol ends on the
/// parameters it started from; the dwell of the last point is ignored because
/// the final quench closes the loop.
struct CycleProtocol {
  std::vector<ProtocolPoint> points;
  bool closed = true;

  /// Two-stroke loop A -> B (dwell at B) -> A.
  static CycleProtocol two_stroke(const DickeParams& a, const DickeParams& b, double dwell_b_s);

  /// Throws NegativeDwell, OpenProtocol, NonNormalPhase, InvalidParameters.
  void validate() const;
};

/// d_to = q d_from + v.
struct StrokeMap {
  Mat4 q = Mat4::Identity();
  CVec4 v = CVec4::Zero();
};

/// Heisenberg-picture polariton vector of the current point expressed through
/// the initial point's: d_current = r d_initial + s.
struct PropagatedFrame {
  CMat4 r = CMat4::Identity();
  CVec4 s = CVec4::Zero();
};

enum class WorkMethod { accumulated, stepwise };

struct WorkBreakdown {
  std::vector<double> stroke_works;  // one per quench, protocol order
  double total = 0.0;                // left-to-right sum of stroke_works
  double initial_excitation_energy = 0.0;
  GaussianState final_state;         // polariton basis of the first point
};

StrokeMap stroke_map(const OperatingPoint& from, const OperatingPoint& to);

/// diag(e^{-i eps- tau}, e^{+i eps- tau}, e^{-i eps+ tau}, e^{+i eps+ tau}).
/// Throws NegativeDwell.
CMat4 dwell_phases(const Diagonalization& d, double tau_s);

PropagatedFrame propagate_frame(const PropagatedFrame& frame, const CMat4& dwell,
                                const StrokeMap& next);

/// <d^dag d>, <c^dag c> of the mode vector r d_initial + s, with the initial
/// state's moments.
std::array<double, 2> frame_occupations(const PropagatedFrame& frame, const GaussianState& initial);

/// Constant part of H_to - H_from (E0 and zero-point terms).
double constant_shift(const Diagonalization& from, const Diagonalization& to);

/// Average work of the sudden quench from -> to. `frame_before` describes the
/// modes of `from` at the moment of the quench (dwell already applied);
/// `initial` must be in the polariton basis of the protocol's first point.
double stroke_work(const PropagatedFrame& frame_before, const OperatingPoint& from,
                   const OperatingPoint& to, const GaussianState& initial);

/// Runs a closed normal-phase protocol. The initial state may be given in the
/// local basis of the first point or in its polariton basis.
/// Negative total = net extraction.
WorkBreakdown run_cycle(const CycleProtocol& protocol, const GaussianState& initial,
                        WorkMethod method = WorkMethod::accumulated);

}  // namespace dicke
