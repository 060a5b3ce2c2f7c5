#include "thetakit/curve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "thetakit/error.hpp"

namespace thetakit {

std::pair<double, double> CurveModel::curvature(double t) const {
  const CurveDerivatives d = derivatives(t);
  const double v2 = dot(d.d1, d.d1);
  const double v = std::sqrt(v2);
  const double c12 = cross(d.d1, d.d2);
  const double kappa = c12 / (v2 * v);
  // d/dt [ cross(d1,d2) / |d1|^3 ]
  const double dkappa = (cross(d.d1, d.d3) * v2 - 3.0 * c12 * dot(d.d1, d.d2)) / (v2 * v2 * v);
  return {kappa, dkappa};
}

double CurveModel::speed(double t) const { return norm(derivatives(t).d1); }

double CurveModel::turning_rate(double t) const {
  const CurveDerivatives d = derivatives(t);
  return cross(d.d1, d.d2) / dot(d.d1, d.d1);
}

namespace {

struct Tables {
  std::vector<double> t;
  std::vector<double> s;
  std::vector<double> turn;
  bool monotone = true;
};

Tables build_tables(const CurveModel& model, const ToleranceConfig& cfg, int samples) {
  const Interval dom = model.domain();
  Tables tab;
  tab.t.resize(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    tab.t[i] = i == samples - 1 ? dom.hi : dom.lo + dom.length() * i / (samples - 1);
  }

  for (double t : tab.t) {
    if (!(model.speed(t) >= PlaneCurve::kMinSpeed)) {
      throw Error(ErrorCode::SingularPoint, "|dgamma/dt| vanishes near t = " + std::to_string(t) +
                                                " on " + model.description());
    }
  }

  const bool unit = model.is_arc_length();
  const auto speed = [&](double t) { return model.speed(t); };
  // Quadrature nodes fall between the table samples, so a cusp can hide from
  // the sample check above; catch it where the turning rate is formed.
  const auto rate = [&](double t) {
    if (!unit && !(model.speed(t) >= PlaneCurve::kMinSpeed)) {
      throw Error(ErrorCode::SingularPoint, "|dgamma/dt| vanishes near t = " + std::to_string(t) +
                                                " on " + model.description());
    }
    return model.turning_rate(t);
  };

  tab.s.resize(tab.t.size());
  tab.turn.resize(tab.t.size());
  tab.turn[0] = 0.0;
  std::vector<double> cumulative(tab.t.size(), 0.0);
  for (std::size_t i = 1; i < tab.t.size(); ++i) {
    tab.turn[i] = tab.turn[i - 1] + integrate_adaptive(rate, tab.t[i - 1], tab.t[i], cfg);
    if (!unit) {
      const double ds = integrate_adaptive(speed, tab.t[i - 1], tab.t[i], cfg);
      if (!(ds > 0.0)) tab.monotone = false;
      cumulative[i] = cumulative[i - 1] + ds;
    }
  }

  if (unit) {
    tab.s = tab.t;
    return tab;
  }

  // Arc length is measured from t = 0 when the domain contains it.
  const double t_ref = dom.clamp(0.0);
  auto it = std::upper_bound(tab.t.begin(), tab.t.end(), t_ref);
  std::size_t k = it == tab.t.begin() ? 0 : static_cast<std::size_t>(it - tab.t.begin()) - 1;
  if (k + 1 >= tab.t.size()) k = tab.t.size() - 2;
  const double offset = cumulative[k] + integrate_adaptive(speed, tab.t[k], t_ref, cfg);
  for (std::size_t i = 0; i < tab.t.size(); ++i) tab.s[i] = cumulative[i] - offset;
  return tab;
}

}  // namespace

PlaneCurve::PlaneCurve(std::shared_ptr<const CurveModel> model, ToleranceConfig cfg) {
  if (!model) throw Error(ErrorCode::InvalidArgument, "null curve model");
  cfg.validate();
  const Interval dom = model->domain();
  if (!(dom.lo < dom.hi)) {
    throw Error(ErrorCode::InvalidArgument, "curve domain must satisfy lo < hi");
  }

  Tables tab = build_tables(*model, cfg, kTableSamples);
  if (!tab.monotone) {
    tab = build_tables(*model, cfg, 4 * kTableSamples);
    if (!tab.monotone) {
      throw Error(ErrorCode::SingularPoint, "arc-length table is not strictly increasing");
    }
  }

  auto impl = std::make_shared<Impl>();
  impl->model = std::move(model);
  impl->cfg = cfg;
  impl->domain = dom;
  impl->t_nodes = std::move(tab.t);
  impl->s_nodes = std::move(tab.s);
  impl->turn_nodes = std::move(tab.turn);
  impl_ = std::move(impl);
}

void PlaneCurve::check_t(double t) const {
  if (!impl_->domain.contains(t)) {
    throw RangeError(ErrorCode::OutOfDomain, t, impl_->domain.lo, impl_->domain.hi,
                     "parameter");
  }
}

std::size_t PlaneCurve::node_interval(double t) const {
  const auto& nodes = impl_->t_nodes;
  auto it = std::upper_bound(nodes.begin(), nodes.end(), t);
  std::size_t k = it == nodes.begin() ? 0 : static_cast<std::size_t>(it - nodes.begin()) - 1;
  return std::min(k, nodes.size() - 2);
}

double PlaneCurve::s_of_t(double t) const {
  check_t(t);
  if (impl_->model->is_arc_length()) return t;
  const std::size_t k = node_interval(t);
  const auto speed = [this](double u) { return impl_->model->speed(u); };
  return impl_->s_nodes[k] + integrate_adaptive(speed, impl_->t_nodes[k], t, impl_->cfg);
}

double PlaneCurve::t_of_s(double s) const {
  const Interval sr = s_range();
  if (!sr.contains(s)) throw RangeError(ErrorCode::OutOfDomain, s, sr.lo, sr.hi, "arc length");
  if (impl_->model->is_arc_length()) return s;

  const auto& sn = impl_->s_nodes;
  auto it = std::upper_bound(sn.begin(), sn.end(), s);
  std::size_t k = it == sn.begin() ? 0 : static_cast<std::size_t>(it - sn.begin()) - 1;
  k = std::min(k, sn.size() - 2);
  const double t0 = impl_->t_nodes[k];
  const double s0 = sn[k];
  const auto speed = [this](double u) { return impl_->model->speed(u); };
  const auto F = [&](double t) { return s0 + integrate_adaptive(speed, t0, t, impl_->cfg); };
  return invert_monotone(F, s, t0, impl_->t_nodes[k + 1], s0, sn[k + 1], impl_->cfg);
}

double PlaneCurve::arc_length(double t0, double t1) const {
  check_t(t0);
  check_t(t1);
  if (impl_->model->is_arc_length()) return t1 - t0;
  const auto speed = [this](double u) { return impl_->model->speed(u); };
  return integrate_adaptive(speed, t0, t1, impl_->cfg);
}

FrameSample PlaneCurve::frame_at(double t) const {
  check_t(t);
  const CurveModel& m = *impl_->model;
  const CurveDerivatives d = m.derivatives(t);
  const double v = norm(d.d1);
  if (!(v >= kMinSpeed)) {
    throw Error(ErrorCode::SingularPoint, "|dgamma/dt| < 1e-12 at t = " + std::to_string(t));
  }
  FrameSample f;
  f.t = t;
  f.s = s_of_t(t);
  f.position = m.position(t);
  f.tangent = (1.0 / v) * d.d1;
  f.normal = perp(f.tangent);
  const auto [kappa, dkappa_dt] = m.curvature(t);
  f.kappa = kappa;
  f.dkappa_ds = dkappa_dt / v;
  return f;
}

FrameSample PlaneCurve::frame_at_s(double s) const {
  FrameSample f = frame_at(t_of_s(s));
  f.s = s;
  return f;
}

double PlaneCurve::kappa_at_s(double s) const {
  return impl_->model->curvature(t_of_s(s)).first;
}

double PlaneCurve::dkappa_ds_at_s(double s) const {
  const double t = t_of_s(s);
  const double dk = impl_->model->curvature(t).second;
  return impl_->model->is_arc_length() ? dk : dk / impl_->model->speed(t);
}

double PlaneCurve::turning_at_t(double t) const {
  check_t(t);
  const std::size_t k = node_interval(t);
  const auto rate = [this](double u) { return impl_->model->turning_rate(u); };
  return impl_->turn_nodes[k] + integrate_adaptive(rate, impl_->t_nodes[k], t, impl_->cfg);
}

double PlaneCurve::t_for_turning(double target, double t_lo, double t_hi) const {
  check_t(t_lo);
  check_t(t_hi);
  // Bracket points: segment ends plus the table nodes strictly between them.
  std::vector<double> ts{t_lo};
  std::vector<double> gs{turning_at_t(t_lo)};
  const auto& tn = impl_->t_nodes;
  auto first = std::upper_bound(tn.begin(), tn.end(), t_lo);
  for (auto it = first; it != tn.end() && *it < t_hi; ++it) {
    ts.push_back(*it);
    gs.push_back(impl_->turn_nodes[static_cast<std::size_t>(it - tn.begin())]);
  }
  ts.push_back(t_hi);
  gs.push_back(turning_at_t(t_hi));

  const double lo_img = std::min(gs.front(), gs.back());
  const double hi_img = std::max(gs.front(), gs.back());
  if (!(target >= lo_img && target <= hi_img)) {
    throw RangeError(ErrorCode::OutOfRange, target, lo_img, hi_img, "turning angle");
  }

  const bool increasing = gs.back() >= gs.front();
  std::size_t lo = 0, hi = ts.size() - 1;
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    const bool below = increasing ? gs[mid] <= target : gs[mid] >= target;
    (below ? lo : hi) = mid;
  }
  const double ta = ts[lo];
  const double ga = gs[lo];
  const std::size_t k = node_interval(ta);
  const auto rate = [this](double u) { return impl_->model->turning_rate(u); };
  const double base = impl_->turn_nodes[k];
  const double tk = impl_->t_nodes[k];
  const auto G = [&](double t) { return base + integrate_adaptive(rate, tk, t, impl_->cfg); };
  // Clamp the bracket values into the monotone order in case of rounding.
  double gb = gs[hi];
  if (increasing ? gb < target : gb > target) gb = target;
  double ga2 = ga;
  if (increasing ? ga2 > target : ga2 < target) ga2 = target;
  return invert_monotone(G, target, ta, ts[hi], ga2, gb, impl_->cfg);
}

}  // namespace thetakit
