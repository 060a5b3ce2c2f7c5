#include "thetakit/curve_models.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "thetakit/error.hpp"

namespace thetakit {

namespace {

std::vector<double> uniform_nodes(Interval dom, int count) {
  std::vector<double> nodes(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    nodes[i] = i == count - 1 ? dom.hi : dom.lo + dom.length() * i / (count - 1);
  }
  return nodes;
}

std::size_t interval_index(const std::vector<double>& nodes, double t) {
  auto it = std::upper_bound(nodes.begin(), nodes.end(), t);
  std::size_t k = it == nodes.begin() ? 0 : static_cast<std::size_t>(it - nodes.begin()) - 1;
  return std::min(k, nodes.size() - 2);
}

}  // namespace

// ---------------------------------------------------------------------------

Antiderivative::Antiderivative(Expression integrand, Interval domain, double origin,
                               ToleranceConfig cfg)
    : integrand_(std::move(integrand)), domain_(domain), cfg_(cfg) {
  nodes_ = uniform_nodes(domain_, kNodes);
  const auto g = [this](double t) { return integrand_.evaluate(t); };
  std::vector<double> cumulative(nodes_.size(), 0.0);
  for (std::size_t i = 1; i < nodes_.size(); ++i) {
    cumulative[i] = cumulative[i - 1] + integrate_adaptive(g, nodes_[i - 1], nodes_[i], cfg_);
  }
  const double o = domain_.clamp(origin);
  const std::size_t k = interval_index(nodes_, o);
  const double offset = cumulative[k] + integrate_adaptive(g, nodes_[k], o, cfg_);
  values_.resize(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) values_[i] = cumulative[i] - offset;
}

double Antiderivative::value(double t) const {
  const std::size_t k = interval_index(nodes_, t);
  const auto g = [this](double u) { return integrand_.evaluate(u); };
  return values_[k] + integrate_adaptive(g, nodes_[k], t, cfg_);
}

Jet Antiderivative::jet(double t) const {
  const Jet g = integrand_.evaluate_jet(t, 2);
  return {value(t), g[0], g[1], g[2]};
}

// ---------------------------------------------------------------------------

ParametricModel::ParametricModel(Component x, Component y, Interval domain,
                                 std::string description)
    : x_(std::move(x)), y_(std::move(y)), domain_(domain), description_(std::move(description)) {}

namespace {

double component_value(const Component& c, double t) {
  if (const auto* e = std::get_if<Expression>(&c)) return e->evaluate(t);
  return std::get<std::shared_ptr<const Antiderivative>>(c)->value(t);
}

// Derivatives 1..3 only; the value slot is left unspecified.
Jet component_derivatives(const Component& c, double t) {
  if (const auto* e = std::get_if<Expression>(&c)) return e->evaluate_jet(t, 3);
  const Jet g = std::get<std::shared_ptr<const Antiderivative>>(c)->integrand().evaluate_jet(t, 2);
  return {0.0, g[0], g[1], g[2]};
}

}  // namespace

Vec2 ParametricModel::position(double t) const {
  return {component_value(x_, t), component_value(y_, t)};
}

CurveDerivatives ParametricModel::derivatives(double t) const {
  const Jet jx = component_derivatives(x_, t);
  const Jet jy = component_derivatives(y_, t);
  return {{jx[1], jy[1]}, {jx[2], jy[2]}, {jx[3], jy[3]}};
}

// ---------------------------------------------------------------------------

ArcLengthModel::ArcLengthModel(Expression kappa, Interval domain, Vec2 start_point,
                               double start_angle, ToleranceConfig cfg)
    : kappa_(std::move(kappa)),
      domain_(domain),
      start_point_(start_point),
      start_angle_(start_angle),
      cfg_(cfg),
      anchor_(domain.clamp(0.0)) {
  if (!(domain_.lo < domain_.hi)) {
    throw Error(ErrorCode::InvalidArgument, "curvature domain must satisfy lo < hi");
  }
  nodes_ = uniform_nodes(domain_, kNodes);
  kappa_nodes_.resize(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) kappa_nodes_[i] = kappa_.evaluate(nodes_[i]);

  const auto k = [this](double s) { return kappa_.evaluate(s); };
  std::vector<double> phi(nodes_.size(), 0.0);
  for (std::size_t i = 1; i < nodes_.size(); ++i) {
    phi[i] = phi[i - 1] + integrate_adaptive(k, nodes_[i - 1], nodes_[i], cfg_);
  }
  const std::size_t ka = interval_index(nodes_, anchor_);
  const double phi_anchor = phi[ka] + integrate_adaptive(k, nodes_[ka], anchor_, cfg_);
  for (double& p : phi) p -= phi_anchor;
  phi_ = std::move(phi);

  // Positions in the canonical frame (anchor at the origin, angle 0).
  const auto cx = [this](double s) { return std::cos(interpolated_angle(s)); };
  const auto cy = [this](double s) { return std::sin(interpolated_angle(s)); };
  std::vector<Vec2> pos(nodes_.size());
  for (std::size_t i = 1; i < nodes_.size(); ++i) {
    pos[i] = pos[i - 1] + Vec2{integrate_adaptive(cx, nodes_[i - 1], nodes_[i], cfg_),
                               integrate_adaptive(cy, nodes_[i - 1], nodes_[i], cfg_)};
  }
  const Vec2 at_anchor = pos[ka] + Vec2{integrate_adaptive(cx, nodes_[ka], anchor_, cfg_),
                                        integrate_adaptive(cy, nodes_[ka], anchor_, cfg_)};
  for (Vec2& p : pos) p = p - at_anchor;
  pos_ = std::move(pos);
}

std::size_t ArcLengthModel::node_interval(double s) const { return interval_index(nodes_, s); }

double ArcLengthModel::interpolated_angle(double s) const {
  const std::size_t i = node_interval(s);
  const double h = nodes_[i + 1] - nodes_[i];
  const double u = (s - nodes_[i]) / h;
  const double u2 = u * u, u3 = u2 * u;
  const double h00 = 2.0 * u3 - 3.0 * u2 + 1.0;
  const double h10 = u3 - 2.0 * u2 + u;
  const double h01 = -2.0 * u3 + 3.0 * u2;
  const double h11 = u3 - u2;
  return h00 * phi_[i] + h10 * h * kappa_nodes_[i] + h01 * phi_[i + 1] +
         h11 * h * kappa_nodes_[i + 1];
}

double ArcLengthModel::angle(double s) const {
  const std::size_t i = node_interval(s);
  const auto k = [this](double u) { return kappa_.evaluate(u); };
  return phi_[i] + integrate_adaptive(k, nodes_[i], s, cfg_);
}

Vec2 ArcLengthModel::canonical_position(double s) const {
  const std::size_t i = node_interval(s);
  const auto cx = [this](double u) { return std::cos(interpolated_angle(u)); };
  const auto cy = [this](double u) { return std::sin(interpolated_angle(u)); };
  return pos_[i] + Vec2{integrate_adaptive(cx, nodes_[i], s, cfg_),
                        integrate_adaptive(cy, nodes_[i], s, cfg_)};
}

Vec2 ArcLengthModel::position(double s) const {
  return rotate(canonical_position(s), start_angle_) + start_point_;
}

CurveDerivatives ArcLengthModel::derivatives(double s) const {
  const Jet kj = kappa_.evaluate_jet(s, 1);
  const double phi = angle(s);
  const Vec2 e = rotate(Vec2{std::cos(phi), std::sin(phi)}, start_angle_);
  const Vec2 n = perp(e);
  return {e, kj[0] * n, kj[1] * n - (kj[0] * kj[0]) * e};
}

std::pair<double, double> ArcLengthModel::curvature(double s) const {
  const Jet kj = kappa_.evaluate_jet(s, 1);
  return {kj[0], kj[1]};
}

std::string ArcLengthModel::description() const {
  std::ostringstream os;
  os << "curvature kappa(" << kappa_.variable() << ") = " << kappa_.serialize() << " on ["
     << domain_.lo << ", " << domain_.hi << "]";
  return os.str();
}

std::string TranslatedModel::description() const {
  std::ostringstream os;
  os << inner_->description() << " translated by (" << offset_.x << ", " << offset_.y << ")";
  return os.str();
}

}  // namespace thetakit
