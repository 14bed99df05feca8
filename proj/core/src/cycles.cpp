#include "dicke/cycles.hpp"

#include <sstream>

#include "dicke/errors.hpp"

namespace dicke {

CycleProtocol CycleProtocol::two_stroke(const DickeParams& a, const DickeParams& b,
                                        double dwell_b_s) {
  CycleProtocol p;
  p.points = {{a, 0.0}, {b, dwell_b_s}, {a, 0.0}};
  p.closed = true;
  return p;
}

void CycleProtocol::validate() const {
  if (points.empty()) {
    throw Error(ErrorCode::open_protocol, "protocol has no points");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    const ProtocolPoint& pt = points[i];
    pt.params.validate();
    if (!(pt.dwell_s >= 0.0)) {
      std::ostringstream msg;
      msg << "dwell " << pt.dwell_s << " s at point " << i;
      throw Error(ErrorCode::negative_dwell, msg.str());
    }
    if (!is_normal_phase(pt.params)) {
      std::ostringstream msg;
      msg << "point " << i << " has lambda=" << pt.params.lambda
          << " >= lambda_cr=" << critical_coupling(pt.params);
      throw Error(ErrorCode::non_normal_phase, msg.str());
    }
  }
  if (!closed || !(points.front().params == points.back().params)) {
    throw Error(ErrorCode::open_protocol, "work totals need a closed protocol");
  }
}

StrokeMap stroke_map(const OperatingPoint& from, const OperatingPoint& to) {
  StrokeMap map;
  map.q = to.diag.m_inv * from.diag.m;
  map.v = to.diag.m_inv.cast<Complex>() * (from.mean_field_vector() - to.mean_field_vector());
  return map;
}

CMat4 dwell_phases(const Diagonalization& d, double tau_s) {
  if (!(tau_s >= 0.0)) {
    std::ostringstream msg;
    msg << "tau = " << tau_s << " s";
    throw Error(ErrorCode::negative_dwell, msg.str());
  }
  const Complex minus = std::polar(1.0, -d.eps_minus * tau_s);
  const Complex plus = std::polar(1.0, -d.eps_plus * tau_s);
  CMat4 out = CMat4::Zero();
  out(0, 0) = minus;
  out(1, 1) = std::conj(minus);
  out(2, 2) = plus;
  out(3, 3) = std::conj(plus);
  return out;
}

PropagatedFrame propagate_frame(const PropagatedFrame& frame, const CMat4& dwell,
                                const StrokeMap& next) {
  const CMat4 qd = next.q.cast<Complex>() * dwell;
  return PropagatedFrame{qd * frame.r, qd * frame.s + next.v};
}

std::array<double, 2> frame_occupations(const PropagatedFrame& frame, const GaussianState& initial) {
  // <x_i x_j> = sigma_ij + Lambda_ij + m_i m_j for the initial ladder vector.
  const CMat4 second = initial.sigma + ordering_correction().cast<Complex>();
  const CVec4 mean = frame.r * initial.disp + frame.s;
  const Complex n_d = (frame.r.row(1) * second * frame.r.row(0).transpose())(0, 0) + mean(1) * mean(0);
  const Complex n_c = (frame.r.row(3) * second * frame.r.row(2).transpose())(0, 0) + mean(3) * mean(2);
  return {n_d.real(), n_c.real()};
}

double constant_shift(const Diagonalization& from, const Diagonalization& to) {
  return (to.e0 - from.e0) + 0.5 * ((to.eps_minus - from.eps_minus) + (to.eps_plus - from.eps_plus) -
                                    (to.omega - from.omega) - (to.omega0_tilde - from.omega0_tilde));
}

namespace {

double mode_energy(const Diagonalization& d, const std::array<double, 2>& n) {
  return d.eps_minus * n[0] + d.eps_plus * n[1];
}

void require_initial_basis(const GaussianState& initial, const OperatingPoint& first) {
  if (initial.basis != Basis::polariton_dc || !(initial.point == first.params)) {
    throw Error(ErrorCode::basis_mismatch,
                "initial state must be in the polariton basis of the protocol's first point");
  }
}

}  // namespace

double stroke_work(const PropagatedFrame& frame_before, const OperatingPoint& from,
                   const OperatingPoint& to, const GaussianState& initial) {
  if (initial.basis != Basis::polariton_dc) {
    throw Error(ErrorCode::basis_mismatch, "initial state must be in a polariton basis");
  }
  if (from.params == to.params) {
    return 0.0;
  }
  const PropagatedFrame after = propagate_frame(frame_before, CMat4::Identity(), stroke_map(from, to));
  return mode_energy(to.diag, frame_occupations(after, initial)) -
         mode_energy(from.diag, frame_occupations(frame_before, initial)) +
         constant_shift(from.diag, to.diag);
}

WorkBreakdown run_cycle(const CycleProtocol& protocol, const GaussianState& initial,
                        WorkMethod method) {
  protocol.validate();
  std::vector<OperatingPoint> ops;
  ops.reserve(protocol.points.size());
  for (const ProtocolPoint& pt : protocol.points) {
    ops.push_back(make_operating_point(pt.params));
  }
  const GaussianState start = to_polariton_basis(initial, ops.front().diag);
  require_initial_basis(start, ops.front());
  require_physical(start);

  WorkBreakdown out;
  out.initial_excitation_energy = mode_energy(ops.front().diag, occupations(start));
  out.stroke_works.reserve(ops.size() - 1);

  if (method == WorkMethod::accumulated) {
    PropagatedFrame frame;
    for (std::size_t k = 0; k + 1 < ops.size(); ++k) {
      const CMat4 dwell = dwell_phases(ops[k].diag, protocol.points[k].dwell_s);
      const PropagatedFrame before = propagate_frame(frame, dwell, StrokeMap{});
      const PropagatedFrame after = propagate_frame(before, CMat4::Identity(), stroke_map(ops[k], ops[k + 1]));
      double w = 0.0;
      if (!(ops[k].params == ops[k + 1].params)) {
        w = mode_energy(ops[k + 1].diag, frame_occupations(after, start)) -
            mode_energy(ops[k].diag, frame_occupations(before, start)) +
            constant_shift(ops[k].diag, ops[k + 1].diag);
      }
      out.stroke_works.push_back(w);
      frame = after;
    }
    out.final_state = start;
    out.final_state.disp = frame.r * start.disp + frame.s;
    out.final_state.sigma = frame.r * start.sigma * frame.r.transpose();
  } else {
    GaussianState state = start;
    for (std::size_t k = 0; k + 1 < ops.size(); ++k) {
      const CMat4 dwell = dwell_phases(ops[k].diag, protocol.points[k].dwell_s);
      state.disp = dwell * state.disp;
      state.sigma = dwell * state.sigma * dwell.transpose();
      const double before = mode_energy(ops[k].diag, occupations(state));
      const StrokeMap map = stroke_map(ops[k], ops[k + 1]);
      const CMat4 q = map.q.cast<Complex>();
      state.disp = q * state.disp + map.v;
      state.sigma = q * state.sigma * q.transpose();
      state.point = ops[k + 1].params;
      double w = 0.0;
      if (!(ops[k].params == ops[k + 1].params)) {
        w = mode_energy(ops[k + 1].diag, occupations(state)) - before +
            constant_shift(ops[k].diag, ops[k + 1].diag);
      }
      out.stroke_works.push_back(w);
    }
    out.final_state = state;
  }

  out.total = 0.0;
  for (double w : out.stroke_works) {
    out.total += w;
  }
  return out;
}

}  // namespace dicke
