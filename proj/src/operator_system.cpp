// Copyright 2026 The opgraph developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "opgraph/operator_system.hpp"

#include <cmath>
#include <random>
#include <string>
#include <utility>

#include "opgraph/errors.hpp"
#include "opgraph/numerics.hpp"

namespace opgraph {

namespace {

// Parts smaller than this, relative to their generator, are rounding residue
// of the Hermitian/anti-Hermitian split rather than directions.
constexpr double kPartTolFactor = 1e-12;

constexpr double kGeneratorRankTol = 1e-9;

double vdot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double vnorm(const std::vector<double>& a) { return std::sqrt(vdot(a, a)); }

// Real-span Gram-Schmidt over Hermitian coordinate vectors; inputs are
// expected unit-norm, outputs are exactly Hermitian.
std::vector<ComplexMatrix> orthonormalize_hermitian(const std::vector<ComplexMatrix>& mats,
                                                    std::size_t n, double rank_tol) {
  std::vector<std::vector<double>> basis;
  for (const auto& m : mats) {
    std::vector<double> v = hermitian_coords(m);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) {
        const double c = vdot(b, v);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * b[i];
      }
    }
    const double nrm = vnorm(v);
    if (nrm > rank_tol) {
      for (auto& x : v) x /= nrm;
      basis.push_back(std::move(v));
    }
  }
  std::vector<ComplexMatrix> out;
  out.reserve(basis.size());
  for (const auto& v : basis) out.push_back(hermitian_from_coords(v, n));
  return out;
}

// Orthonormal Hermitian basis of S_sa with the identity direction first.
std::vector<ComplexMatrix> identity_first_basis(const OperatorSystem& s) {
  const std::size_t n = s.dim_h();
  std::vector<ComplexMatrix> candidates;
  candidates.reserve(s.dim() + 1);
  candidates.push_back(ComplexMatrix::identity(n) * complexd(1.0 / std::sqrt(double(n)), 0.0));
  for (const auto& b : s.herm_basis()) candidates.push_back(b);
  auto basis = orthonormalize_hermitian(candidates, n, kGeneratorRankTol);
  if (basis.size() != s.dim()) {
    throw ValidationError("identity rotation changed the system dimension from " +
                          std::to_string(s.dim()) + " to " + std::to_string(basis.size()));
  }
  return basis;
}

double max_gram_deviation(const std::vector<ComplexMatrix>& basis) {
  double worst = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      const complexd g = hs_inner(basis[i], basis[j]);
      const double target = (i == j) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(g - complexd(target, 0.0)));
    }
  }
  return worst;
}

double max_relative_hermiticity(const std::vector<ComplexMatrix>& mats) {
  double worst = 0.0;
  for (const auto& m : mats) {
    worst = std::max(worst, hermiticity_residual(m) / std::max(1.0, m.frobenius_norm()));
  }
  return worst;
}

// ||X - P(X)||_F for Hermitian X against the real span of the basis.
double span_residual(const std::vector<ComplexMatrix>& basis, const ComplexMatrix& x) {
  std::vector<double> v = hermitian_coords(x);
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& b : basis) {
      const std::vector<double> bc = hermitian_coords(b);
      const double c = vdot(bc, v);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * bc[i];
    }
  }
  return vnorm(v);
}

}  // namespace

OperatorSystem::OperatorSystem(std::size_t dim_h, std::vector<ComplexMatrix> basis)
    : dim_h_(dim_h), herm_basis_(std::move(basis)) {
  if (dim_h_ == 0) throw DimensionError("operator system dimension must be at least 1");
  if (herm_basis_.empty() || herm_basis_.size() > dim_h_ * dim_h_) {
    throw ValidationError("operator system basis size " + std::to_string(herm_basis_.size()) +
                          " outside [1, " + std::to_string(dim_h_ * dim_h_) + "]");
  }
}

OperatorSystem OperatorSystem::from_generators(std::size_t dim_h,
                                               const std::vector<ComplexMatrix>& generators) {
  if (dim_h == 0) throw DimensionError("dim_h must be at least 1");
  std::vector<ComplexMatrix> candidates;
  candidates.reserve(2 * generators.size() + 1);
  candidates.push_back(ComplexMatrix::identity(dim_h) *
                       complexd(1.0 / std::sqrt(double(dim_h)), 0.0));
  for (const auto& g : generators) {
    if (g.rows() != dim_h || g.cols() != dim_h) {
      throw DimensionError("generator shape " + std::to_string(g.rows()) + "x" +
                           std::to_string(g.cols()) + " does not match dim_h " +
                           std::to_string(dim_h));
    }
    const double gnorm = g.frobenius_norm();
    if (gnorm == 0.0) continue;
    for (ComplexMatrix part : {hermitian_part(g), antihermitian_part(g)}) {
      const double pnorm = part.frobenius_norm();
      if (pnorm > kPartTolFactor * gnorm) {
        part *= complexd(1.0 / pnorm, 0.0);
        candidates.push_back(std::move(part));
      }
    }
  }
  return OperatorSystem(dim_h, orthonormalize_hermitian(candidates, dim_h, kGeneratorRankTol));
}

OperatorSystem OperatorSystem::from_herm_basis(std::size_t dim_h,
                                               std::vector<ComplexMatrix> basis, double tol) {
  if (dim_h == 0) throw DimensionError("dim_h must be at least 1");
  for (const auto& b : basis) {
    if (b.rows() != dim_h || b.cols() != dim_h) {
      throw ValidationError("basis element shape does not match dim_h");
    }
  }
  OperatorSystem s(dim_h, std::move(basis));
  if (max_relative_hermiticity(s.herm_basis_) > tol) {
    throw ValidationError("hermitian basis: element is not Hermitian within " +
                          std::to_string(tol));
  }
  if (max_gram_deviation(s.herm_basis_) > tol) {
    throw ValidationError("orthonormal basis: Gram matrix deviates from identity beyond " +
                          std::to_string(tol));
  }
  const ComplexMatrix eye = ComplexMatrix::identity(dim_h);
  const double res = span_residual(s.herm_basis_, eye) / std::max(1.0, eye.frobenius_norm());
  if (res > tol) {
    throw ValidationError("identity in span: residual " + std::to_string(res) +
                          " exceeds " + std::to_string(tol));
  }
  return s;
}

bool OperatorSystem::contains(const ComplexMatrix& m, double tol) const {
  if (m.rows() != dim_h_ || m.cols() != dim_h_) {
    throw DimensionError("contains: matrix shape does not match the system");
  }
  const double rh = span_residual(herm_basis_, hermitian_part(m));
  const double ra = span_residual(herm_basis_, antihermitian_part(m));
  const double res = std::sqrt(rh * rh + ra * ra);
  return res <= tol * std::max(1.0, m.frobenius_norm());
}

bool OperatorSystem::equals(const OperatorSystem& other, double tol) const {
  return projector_distance(*this, other) <= tol;
}

double projector_distance(const OperatorSystem& a, const OperatorSystem& b) {
  if (a.dim_h() != b.dim_h()) {
    throw DimensionError("projector_distance: systems live on different spaces");
  }
  const std::size_t nc = a.dim_h() * a.dim_h();
  auto build = [nc](const OperatorSystem& s) {
    std::vector<double> p(nc * nc, 0.0);
    for (const auto& bm : s.herm_basis()) {
      const std::vector<double> v = hermitian_coords(bm);
      for (std::size_t x = 0; x < nc; ++x) {
        if (v[x] == 0.0) continue;
        for (std::size_t y = 0; y < nc; ++y) p[x * nc + y] += v[x] * v[y];
      }
    }
    return p;
  };
  const std::vector<double> pa = build(a);
  const std::vector<double> pb = build(b);
  double s = 0.0;
  for (std::size_t i = 0; i < pa.size(); ++i) {
    const double d = pa[i] - pb[i];
    s += d * d;
  }
  return std::sqrt(s);
}

const char* effect_kind_name(EffectKind kind) {
  return kind == EffectKind::duan ? "duan" : "geometric";
}

EffectBasis duan_effect_basis(const OperatorSystem& s) {
  const std::size_t n = s.dim_h();
  const std::size_t d = s.dim();
  if (d == 1) return EffectBasis{EffectKind::duan, {ComplexMatrix::identity(n)}};

  const auto rotated = identity_first_basis(s);
  const ComplexMatrix eye = ComplexMatrix::identity(n);

  // F_k = I + B_k/2 with B_k at unit operator norm, so F_k >= I/2.
  std::vector<ComplexMatrix> f;
  f.reserve(d - 1);
  ComplexMatrix fsum(n, n);
  for (std::size_t k = 1; k < d; ++k) {
    const double opnorm = operator_norm_hermitian(rotated[k]);
    ComplexMatrix fk = eye + rotated[k] * complexd(0.5 / opnorm, 0.0);
    fsum += fk;
    f.push_back(std::move(fk));
  }
  const double beta = 0.5 / eigvals_hermitian(fsum).back();

  EffectBasis out;
  out.kind = EffectKind::duan;
  out.effects.reserve(d);
  out.effects.push_back(eye - fsum * complexd(beta, 0.0));  // A_1 >= I/2
  for (auto& fk : f) out.effects.push_back(fk * complexd(beta, 0.0));
  return out;
}

EffectBasis geometric_effect_sequence(const OperatorSystem& s) {
  const std::size_t n = s.dim_h();
  const std::size_t d = s.dim();
  if (d == 1) return EffectBasis{EffectKind::geometric, {ComplexMatrix::identity(n)}};

  const auto rotated = identity_first_basis(s);
  const ComplexMatrix eye = ComplexMatrix::identity(n);

  std::vector<ComplexMatrix> tail;
  tail.reserve(d - 1);
  ComplexMatrix sum(n, n);
  for (std::size_t k = 1; k < d; ++k) {
    const double opnorm = operator_norm_hermitian(rotated[k]);
    // ||A_tilde - I|| = 1/2, then A_k = A_tilde / 2^k  (k here is 1-based + 1)
    ComplexMatrix ak = (eye + rotated[k] * complexd(0.5 / opnorm, 0.0)) *
                       complexd(std::ldexp(1.0, -static_cast<int>(k + 1)), 0.0);
    sum += ak;
    tail.push_back(std::move(ak));
  }

  EffectBasis out;
  out.kind = EffectKind::geometric;
  out.effects.reserve(d);
  out.effects.push_back(eye - sum);
  for (auto& ak : tail) out.effects.push_back(std::move(ak));
  return out;
}

std::vector<CheckResult> check_effect_basis(const EffectBasis& e, bool strict) {
  if (e.effects.empty()) throw ValidationError("effect basis is empty");
  const std::size_t n = e.dim_h();
  for (const auto& a : e.effects) {
    if (!a.is_square() || a.rows() != n) {
      throw ValidationError("effects must be square matrices of one dimension");
    }
  }
  const double spec_factor = strict ? kPsdTolFactor : 1e-6;
  const double sum_factor = strict ? 1e-9 : 1e-6;
  const double bound_slack = strict ? 0.0 : 1e-6;

  std::vector<CheckResult> out;

  double herm = max_relative_hermiticity(e.effects);
  out.push_back({"effects hermitian", herm, strict ? kHermTolFactor : 1e-6,
                 herm <= (strict ? kHermTolFactor : 1e-6)});

  double min_eig = 0.0, max_eig = 0.0;
  bool spectrum_ok = true;
  bool first = true;
  for (const auto& a : e.effects) {
    const auto vals = eigvals_hermitian(a);
    const double c = std::max(1.0, a.frobenius_norm());
    spectrum_ok = spectrum_ok && vals.front() >= -spec_factor * c &&
                  vals.back() <= 1.0 + spec_factor * c;
    if (first) {
      min_eig = vals.front();
      max_eig = vals.back();
      first = false;
    } else {
      min_eig = std::min(min_eig, vals.front());
      max_eig = std::max(max_eig, vals.back());
    }
  }
  out.push_back({"spectrum lower bound", min_eig, -spec_factor, spectrum_ok});
  out.push_back({"spectrum upper bound", max_eig, 1.0 + spec_factor, spectrum_ok});

  ComplexMatrix sum(n, n);
  for (const auto& a : e.effects) sum += a;
  const double sum_res = distance_frobenius(sum, ComplexMatrix::identity(n));
  out.push_back({"sum to identity", sum_res, sum_factor * double(n),
                 sum_res <= sum_factor * double(n)});

  if (e.kind == EffectKind::geometric) {
    // ||A_k|| < 2^-(k-1) for k >= 2 and ||I - A_1|| < 1, strictly.
    double worst_ratio = 0.0;
    for (std::size_t k = 1; k < e.effects.size(); ++k) {
      const double norm = operator_norm_hermitian(e.effects[k]);
      worst_ratio = std::max(worst_ratio, norm * std::ldexp(1.0, static_cast<int>(k)));
    }
    out.push_back({"geometric norm decay", worst_ratio, 1.0 + bound_slack,
                   e.effects.size() == 1 || worst_ratio < 1.0 + bound_slack});
    const double defect = operator_norm_hermitian(
        ComplexMatrix::identity(n) - e.effects.front());
    out.push_back({"identity defect", defect, 1.0 + bound_slack, defect < 1.0 + bound_slack});
  }
  return out;
}

void validate_effect_basis(const EffectBasis& e) {
  for (const auto& check : check_effect_basis(e, /*strict=*/true)) {
    if (!check.ok) {
      throw ValidationError("effect basis invariant '" + check.name + "' failed: value " +
                            std::to_string(check.value));
    }
  }
}

std::vector<CheckResult> check_operator_system(const OperatorSystem& s, bool strict) {
  const double herm_tol = strict ? kHermTolFactor : 1e-6;
  const double gram_tol = strict ? 1e-9 : 1e-6;
  const double span_tol = strict ? 1e-8 : 1e-6;

  std::vector<CheckResult> out;
  const double herm = max_relative_hermiticity(s.herm_basis());
  out.push_back({"hermitian basis", herm, herm_tol, herm <= herm_tol});
  const double gram = max_gram_deviation(s.herm_basis());
  out.push_back({"orthonormal basis", gram, gram_tol, gram <= gram_tol});
  const ComplexMatrix eye = ComplexMatrix::identity(s.dim_h());
  const double span =
      span_residual(s.herm_basis(), eye) / std::max(1.0, eye.frobenius_norm());
  out.push_back({"identity in span", span, span_tol, span <= span_tol});
  out.push_back({"dimension bound", double(s.dim()), double(s.dim_h() * s.dim_h()),
                 s.dim() >= 1 && s.dim() <= s.dim_h() * s.dim_h()});
  return out;
}

OperatorSystem random_system(std::size_t dim_h, std::size_t dim_s, std::uint64_t seed) {
  if (dim_h == 0) throw ParameterError("random_system: dim_h must be at least 1");
  if (dim_s == 0 || dim_s > dim_h * dim_h) {
    throw ParameterError("random_system: dim_s must lie in [1, dim_h^2]");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int attempt = 0; attempt < 16; ++attempt) {
    std::vector<ComplexMatrix> gens;
    gens.reserve(dim_s - 1);
    for (std::size_t k = 0; k + 1 < dim_s; ++k) {
      ComplexMatrix g(dim_h, dim_h);
      for (auto& v : g.data()) v = complexd(gauss(rng), gauss(rng));
      gens.push_back(hermitian_part(g));
    }
    OperatorSystem s = OperatorSystem::from_generators(dim_h, gens);
    if (s.dim() == dim_s) return s;
  }
  throw ValidationError("random_system: failed to reach the requested dimension");
}

}  // namespace opgraph
