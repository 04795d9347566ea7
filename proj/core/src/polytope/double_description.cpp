#include "selberg/polytope/double_description.hpp"

#include "selberg/error.hpp"

namespace selberg {

Rational dot(const RVec& a, const RVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

RVec primitive(const RVec& v) {
  BigInt l = 1;
  for (const auto& x : v) l = boost::multiprecision::lcm(l, denominator_of(x));
  BigInt g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, BigInt(numerator_of(x) * (l / denominator_of(x))));
  if (g == 0) return v;
  RVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(Rational(numerator_of(x) * (l / denominator_of(x)), g));
  return out;
}

namespace {

RVec axpy(const Rational& a, const RVec& x, const Rational& b, const RVec& y) {
  RVec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i] + b * y[i];
  return out;
}

}  // namespace

ConeGenerators double_description(const std::vector<RVec>& constraints, std::size_t dim) {
  const std::size_t m = constraints.size();
  for (const auto& c : constraints) require(c.size() == dim, ErrorCode::DimensionMismatch, "constraint length");

  std::vector<RVec> lin;
  for (std::size_t i = 0; i < dim; ++i) {
    RVec e(dim, Rational(0));
    e[i] = 1;
    lin.push_back(std::move(e));
  }
  std::vector<RVec> rays;
  std::vector<boost::dynamic_bitset<>> tight;  // tight among processed constraints

  for (std::size_t t = 0; t < m; ++t) {
    const RVec& a = constraints[t];
    bool all_zero = true;
    for (const auto& x : a) all_zero = all_zero && x == 0;
    if (all_zero) {
      for (auto& z : tight) z.set(t);
      continue;
    }

    std::size_t pivot = lin.size();
    for (std::size_t i = 0; i < lin.size(); ++i)
      if (dot(a, lin[i]) != 0) {
        pivot = i;
        break;
      }

    if (pivot < lin.size()) {
      RVec l0 = lin[pivot];
      Rational a0 = dot(a, l0);
      if (a0 < 0) {
        for (auto& x : l0) x = -x;
        a0 = -a0;
      }
      std::vector<RVec> next_lin;
      for (std::size_t i = 0; i < lin.size(); ++i) {
        if (i == pivot) continue;
        const Rational ai = dot(a, lin[i]);
        next_lin.push_back(ai == 0 ? lin[i] : primitive(axpy(Rational(1), lin[i], Rational(-ai / a0), l0)));
      }
      for (std::size_t r = 0; r < rays.size(); ++r) {
        const Rational ar = dot(a, rays[r]);
        if (ar != 0) rays[r] = primitive(axpy(Rational(1), rays[r], Rational(-ar / a0), l0));
        tight[r].set(t);
      }
      boost::dynamic_bitset<> z0(m);
      for (std::size_t s = 0; s < t; ++s) z0.set(s);
      rays.push_back(primitive(l0));
      tight.push_back(z0);
      lin = std::move(next_lin);
      continue;
    }

    std::vector<std::size_t> pos, neg, zero;
    std::vector<Rational> val(rays.size());
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = dot(a, rays[r]);
      if (val[r] > 0) pos.push_back(r);
      else if (val[r] < 0) neg.push_back(r);
      else zero.push_back(r);
    }

    std::vector<RVec> next_rays;
    std::vector<boost::dynamic_bitset<>> next_tight;
    for (std::size_t r : pos) {
      next_rays.push_back(rays[r]);
      next_tight.push_back(tight[r]);
    }
    for (std::size_t r : zero) {
      next_rays.push_back(rays[r]);
      boost::dynamic_bitset<> z = tight[r];
      z.set(t);
      next_tight.push_back(std::move(z));
    }
    const std::size_t need = dim - lin.size() >= 2 ? dim - lin.size() - 2 : 0;
    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        const boost::dynamic_bitset<> common = tight[p] & tight[q];
        if (common.count() < need) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.is_subset_of(tight[r])) adjacent = false;
        }
        if (!adjacent) continue;
        next_rays.push_back(primitive(axpy(val[p], rays[q], Rational(-val[q]), rays[p])));
        boost::dynamic_bitset<> z = common;
        z.set(t);
        next_tight.push_back(std::move(z));
      }
    }
    rays = std::move(next_rays);
    tight = std::move(next_tight);
  }

  ConeGenerators out;
  out.dim = dim;
  out.lineality = std::move(lin);
  out.rays = std::move(rays);
  for (const auto& r : out.rays) {
    boost::dynamic_bitset<> z(m);
    for (std::size_t i = 0; i < m; ++i)
      if (dot(constraints[i], r) == 0) z.set(i);
    out.incidence.push_back(std::move(z));
  }
  return out;
}

}  // namespace selberg
