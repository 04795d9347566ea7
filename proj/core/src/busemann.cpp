#include "selberg/busemann.hpp"

#include <cmath>

#include "selberg/error.hpp"
#include "selberg/matcore/json_io.hpp"

namespace selberg {

namespace {

Eigen::MatrixXd full_frame(std::size_t n) { return Eigen::MatrixXd::Identity(n, n); }

const Eigen::MatrixXd component_frame(const BusemannSpec& spec) {
  if (spec.component()) return spec.component()->frame();
  return full_frame(spec.dim());
}

double spd_inverse_trace(const Eigen::MatrixXd& yinv, const Eigen::MatrixXd& alpha) {
  return (yinv * alpha).trace();
}

// tr(M alpha) det(iota^T M iota)^(-1/m) where M plays the role of Y^-1.
double inverse_form_value(const Eigen::MatrixXd& m, const Eigen::MatrixXd& alpha, const Eigen::MatrixXd& iota) {
  const double t = spd_inverse_trace(m, alpha);
  const Eigen::MatrixXd r = iota.transpose() * m * iota;
  const double d = r.determinant();
  return t * std::pow(d, -1.0 / static_cast<double>(iota.cols()));
}

Eigen::MatrixXd orthogonal_complement(const Eigen::MatrixXd& q) {
  const Eigen::Index n = q.rows();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(q, Eigen::ComputeFullU);
  return svd.matrixU().rightCols(n - q.cols());
}

bool trivially_meets(const BoundaryComponent& b, const BoundaryComponent& p) {
  if (b.has_exact_basis() && p.has_exact_basis()) {
    return rank(b.basis().hstack(p.basis())) == b.dim() + p.dim();
  }
  Eigen::MatrixXd both(b.ambient_dim(), b.dim() + p.dim());
  both << b.frame(), p.frame();
  return rank(Matrix::from_eigen(both), 1e-9) == b.dim() + p.dim();
}

}  // namespace

Scalar selberg(const SpacePoint& x, const SpacePoint& y) {
  require(x.dim() == y.dim(), ErrorCode::DimensionMismatch, "selberg invariant dimension mismatch");
  return trace_product(x.inverse(), y.matrix());
}

BusemannSpec BusemannSpec::type0(SatakePoint alpha, SpacePoint reference) {
  require(alpha.dim() == reference.dim(), ErrorCode::DimensionMismatch, "alpha and reference dimensions differ");
  require(alpha.is_boundary(), ErrorCode::NotBoundaryPoint, "type-0 base point must be singular");
  return BusemannSpec(BusemannKind::Type0, std::move(alpha), std::nullopt, std::move(reference));
}

BusemannSpec BusemannSpec::type_k(SatakePoint alpha, BoundaryComponent component, SpacePoint reference) {
  require(alpha.dim() == reference.dim() && component.ambient_dim() == alpha.dim(), ErrorCode::DimensionMismatch,
          "alpha, component and reference dimensions differ");
  require(component.is_proper(), ErrorCode::PreconditionViolated, "component must be a proper subspace");
  require(alpha.rank() < component.dim(), ErrorCode::PreconditionViolated,
          "rank(alpha) must be smaller than the component dimension");
  require(component_leq(BoundaryComponent::from_span(alpha.matrix().to_matrix()), component),
          ErrorCode::PreconditionViolated, "col(alpha) is not contained in the component");
  return BusemannSpec(BusemannKind::TypeK, std::move(alpha), std::move(component), std::move(reference));
}

std::size_t BusemannSpec::k() const noexcept {
  if (!component_) return 0;
  return dim() - component_->dim();
}

BusemannSpec BusemannSpec::with_reference(SpacePoint reference) const {
  require(reference.dim() == dim(), ErrorCode::DimensionMismatch, "reference dimension mismatch");
  return BusemannSpec(kind_, alpha_, component_, std::move(reference));
}

BusemannSpec BusemannSpec::from_json(const nlohmann::json& j) {
  require(j.is_object(), ErrorCode::Parse, "Busemann spec must be an object");
  const std::string kind = j.value("kind", std::string("type0"));
  const SatakePoint alpha = SatakePoint::from(sym_from_json(j.at("alpha")));
  const SpacePoint x = point_from_json(j.at("reference"));
  if (kind == "type0" || kind == "Type0") return type0(alpha, x);
  if (kind == "typek" || kind == "TypeK" || kind == "type_k") {
    require(j.contains("component"), ErrorCode::Parse, "typek spec needs a component");
    return type_k(alpha, BoundaryComponent::from_json(j.at("component")), x);
  }
  throw Error(ErrorCode::Parse, "unknown Busemann kind '" + kind + "'");
}

nlohmann::json BusemannSpec::to_json() const {
  nlohmann::json j = {{"kind", kind_ == BusemannKind::Type0 ? "type0" : "typek"},
                      {"alpha", sym_to_json(alpha_.matrix())},
                      {"reference", sym_to_json(reference_.matrix())}};
  if (component_) j["component"] = component_->to_json();
  return j;
}

Scalar busemann0(const BusemannSpec& spec, const SpacePoint& y) {
  require(y.dim() == spec.dim(), ErrorCode::DimensionMismatch, "point dimension mismatch");
  const SymMatrix& a = spec.alpha().matrix();
  return trace_product(y.inverse(), a) / trace_product(spec.reference().inverse(), a);
}

double busemann_unnormalized(const BusemannSpec& spec, const Eigen::MatrixXd& y) {
  require(static_cast<std::size_t>(y.rows()) == spec.dim(), ErrorCode::DimensionMismatch, "point dimension mismatch");
  Eigen::LDLT<Eigen::MatrixXd> ldlt(y);
  const Eigen::MatrixXd yinv = ldlt.solve(Eigen::MatrixXd::Identity(y.rows(), y.cols()));
  return inverse_form_value(yinv, spec.alpha().matrix().to_eigen(), component_frame(spec));
}

double busemann_k(const BusemannSpec& spec, const SpacePoint& y) {
  require(spec.kind() == BusemannKind::TypeK, ErrorCode::InvalidArgument, "busemann_k needs a type-k spec");
  require(y.dim() == spec.dim(), ErrorCode::DimensionMismatch, "point dimension mismatch");
  const Eigen::MatrixXd alpha = spec.alpha().matrix().to_eigen();
  const Eigen::MatrixXd& iota = spec.component()->frame();
  return inverse_form_value(y.inverse().to_eigen(), alpha, iota) /
         inverse_form_value(spec.reference().inverse().to_eigen(), alpha, iota);
}

double busemann(const BusemannSpec& spec, const SpacePoint& y) {
  if (spec.kind() == BusemannKind::Type0) return busemann0(spec, y).to_double();
  return busemann_k(spec, y);
}

double classical_busemann_vertex(const BoundaryComponent& v, const SpacePoint& x, const SpacePoint& y) {
  require(v.is_proper(), ErrorCode::PreconditionViolated, "V must be a proper subspace");
  require(v.ambient_dim() == x.dim() && x.dim() == y.dim(), ErrorCode::DimensionMismatch, "dimension mismatch");
  const std::size_t n = x.dim();
  const std::size_t j = v.dim();
  const bool exact = v.has_exact_basis() && x.is_exact() && y.is_exact();

  // G = [U | C] with C chosen from the standard basis.
  Matrix g = exact ? v.basis() : Matrix::from_eigen(v.frame());
  for (std::size_t i = 0; i < n && g.cols() < n; ++i) {
    Matrix e(n, 1);
    e(i, 0) = 1;
    Matrix trial = g.hstack(e);
    if (rank(trial) == trial.cols()) g = trial;
  }
  require(g.cols() == n, ErrorCode::Singular, "could not complete the basis of V");
  const Matrix ginv_t = inverse(g).transpose();

  auto leading_minor = [&](const SpacePoint& p) {
    // (G^-1 P G^-T)^-1 = G^T P^-1 G; its leading j x j block.
    const SymMatrix moved = congruence(ginv_t, p.matrix());
    const SymMatrix inv = inverse(moved);
    Matrix lead(j, j);
    for (std::size_t r = 0; r < j; ++r)
      for (std::size_t c = 0; c < j; ++c) lead(r, c) = inv(r, c);
    return determinant(lead);
  };
  const Scalar ratio = leading_minor(y) / leading_minor(x);
  const double coef = std::sqrt(static_cast<double>(n) / static_cast<double>(j * (n - j)));
  return coef * std::log(ratio.to_double());
}

HoroballSpec::HoroballSpec(BusemannSpec b, double r, bool closed_ball)
    : busemann(std::move(b)), level(r), closed(closed_ball) {
  require(r > 0, ErrorCode::InvalidArgument, "horoball level must be positive");
}

bool horoball_contains(const HoroballSpec& h, const SpacePoint& y) {
  const double v = selberg::busemann(h.busemann, y);
  return h.closed ? v <= h.level : v < h.level;
}

std::string to_string(LimitTag tag) {
  switch (tag) {
    case LimitTag::Zero: return "Zero";
    case LimitTag::Finite: return "Finite";
    case LimitTag::Infinity: return "Infinity";
  }
  return "?";
}

nlohmann::json AsymptoticResult::to_json() const {
  nlohmann::json j = {{"tag", to_string(tag)}, {"rule", rule}, {"numeric_consistent", numeric_consistent}};
  if (value) j["value"] = *value;
  nlohmann::json s = nlohmann::json::array();
  for (std::size_t i = 0; i < samples.size(); ++i) s.push_back({{"eps", epsilons[i]}, {"value", samples[i]}});
  j["samples"] = s;
  if (!diagnostic.empty()) j["diagnostic"] = diagnostic;
  return j;
}

AsymptoticResult asymptotic_limit(const BusemannSpec& spec, const SatakePoint& beta, const SpacePoint& y,
                                  const std::vector<double>& schedule) {
  require(beta.dim() == spec.dim() && y.dim() == spec.dim(), ErrorCode::DimensionMismatch, "dimension mismatch");
  require(beta.is_boundary(), ErrorCode::NotBoundaryPoint, "beta must be a boundary point");

  const BoundaryComponent a = BoundaryComponent::from_span(spec.alpha().matrix().to_matrix());
  const BoundaryComponent b = component_of(beta);
  const bool a_in_b = component_leq(a, b);
  const bool p_in_b = spec.component() && component_leq(*spec.component(), b);
  const bool b_meets_p_trivially = spec.component() && trivially_meets(b, *spec.component());

  AsymptoticResult res;
  const Eigen::MatrixXd iota = component_frame(spec);
  const Eigen::MatrixXd alpha = spec.alpha().matrix().to_eigen();
  const Eigen::MatrixXd beta_m = beta.matrix().to_eigen();
  const Eigen::MatrixXd ym = y.matrix().to_eigen();
  const double denom = busemann_unnormalized(spec, spec.reference().matrix().to_eigen());

  if (a_in_b && !p_in_b) {
    res.tag = LimitTag::Zero;
    res.rule = "col(alpha) in col(beta), component not in col(beta)";
  } else if (a_in_b && p_in_b) {
    res.tag = LimitTag::Finite;
    res.rule = "col(alpha) in col(beta), component in col(beta)";
    const Eigen::MatrixXd& ib = b.frame();
    const Eigen::MatrixXd m_inf = (ib.transpose() * beta_m * ib).inverse();
    const Eigen::MatrixXd a_b = ib.transpose() * alpha * ib;
    const Eigen::MatrixXd jmat = ib.transpose() * iota;
    res.value = inverse_form_value(m_inf, a_b, jmat) / denom;
  } else if (!a_in_b && b_meets_p_trivially) {
    res.tag = LimitTag::Finite;
    res.rule = "col(alpha) not in col(beta), col(beta) meets component trivially";
    const Eigen::MatrixXd kappa = orthogonal_complement(b.frame());
    const Eigen::MatrixXd m_minus = kappa * (kappa.transpose() * ym * kappa).inverse() * kappa.transpose();
    res.value = inverse_form_value(m_minus, alpha, iota) / denom;
  } else {
    res.tag = LimitTag::Infinity;
    res.rule = "col(alpha) not in col(beta), col(beta) meets component";
  }

  for (double eps : schedule) {
    const Eigen::MatrixXd m = beta_m + eps * ym;
    res.epsilons.push_back(eps);
    res.samples.push_back(busemann_unnormalized(spec, m) / denom);
  }

  if (res.samples.size() >= 2) {
    const double first = res.samples.front();
    const double last = res.samples.back();
    bool decreasing = true;
    bool increasing = true;
    for (std::size_t i = 1; i < res.samples.size(); ++i) {
      if (!(res.samples[i] < res.samples[i - 1])) decreasing = false;
      if (!(res.samples[i] > res.samples[i - 1])) increasing = false;
    }
    switch (res.tag) {
      case LimitTag::Zero:
        res.numeric_consistent = decreasing && last < 0.5 * first;
        break;
      case LimitTag::Infinity:
        res.numeric_consistent = increasing && last > 2.0 * first;
        break;
      case LimitTag::Finite:
        res.numeric_consistent = std::abs(last - *res.value) <= 1e-3 * std::abs(*res.value);
        break;
    }
    if (!res.numeric_consistent) {
      res.diagnostic = "numeric samples disagree with the " + to_string(res.tag) + " classification";
    }
  }
  return res;
}

double lipschitz_constant(const BusemannSpec& spec) {
  const double m = static_cast<double>(spec.dim() - spec.k());
  return std::sqrt((m - 1.0) / m);
}

double lipschitz_margin(const BusemannSpec& spec, const SpacePoint& y1, const SpacePoint& y2) {
  const double d = geodesic_distance(y1, y2);
  const double diff = std::abs(std::log(busemann(spec, y1)) - std::log(busemann(spec, y2)));
  return lipschitz_constant(spec) * d - diff;
}

}  // namespace selberg
