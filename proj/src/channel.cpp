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

#include "opgraph/channel.hpp"

#include <cmath>
#include <random>
#include <string>
#include <utility>

#include "opgraph/errors.hpp"
#include "opgraph/numerics.hpp"

namespace opgraph {

namespace {

// Kraus operators and complementary rows below this norm carry no direction.
constexpr double kZeroKrausTol = 1e-12;

ComplexMatrix kraus_gram_sum(const std::vector<ComplexMatrix>& kraus) {
  ComplexMatrix sum(kraus.front().cols(), kraus.front().cols());
  for (const auto& v : kraus) {
    const ComplexMatrix va = v.adjoint();
    sum += va * v;
  }
  return sum;
}

}  // namespace

QuantumChannel::QuantumChannel(std::vector<ComplexMatrix> kraus, double tp_tol_factor)
    : dim_in_(0), dim_out_(0), kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw ValidationError("channel needs at least one Kraus operator");
  dim_out_ = kraus_.front().rows();
  dim_in_ = kraus_.front().cols();
  for (const auto& v : kraus_) {
    if (v.rows() != dim_out_ || v.cols() != dim_in_) {
      throw DimensionError("Kraus operators must share one shape");
    }
    if (v.frobenius_norm() <= kZeroKrausTol) {
      throw ValidationError("all-zero Kraus operator");
    }
  }
  const double res = tp_residual();
  const double bound = tp_tol_factor * double(dim_in_);
  if (res > bound) {
    throw ValidationError("trace preservation: residual " + std::to_string(res) +
                          " exceeds " + std::to_string(bound));
  }
}

double QuantumChannel::tp_residual() const {
  return distance_frobenius(kraus_gram_sum(kraus_), ComplexMatrix::identity(dim_in_));
}

ComplexMatrix QuantumChannel::apply(const ComplexMatrix& rho) const {
  if (rho.rows() != dim_in_ || rho.cols() != dim_in_) {
    throw DimensionError("apply: state must be " + std::to_string(dim_in_) + "x" +
                         std::to_string(dim_in_));
  }
  ComplexMatrix out(dim_out_, dim_out_);
  for (const auto& v : kraus_) out += (v * rho) * v.adjoint();
  return out;
}

ComplexMatrix QuantumChannel::dual_apply(const ComplexMatrix& b) const {
  if (b.rows() != dim_out_ || b.cols() != dim_out_) {
    throw DimensionError("dual_apply: observable must be " + std::to_string(dim_out_) + "x" +
                         std::to_string(dim_out_));
  }
  ComplexMatrix out(dim_in_, dim_in_);
  for (const auto& v : kraus_) out += (v.adjoint() * b) * v;
  return out;
}

ComplexMatrix QuantumChannel::dual_complementary_apply(const ComplexMatrix& b) const {
  const std::size_t m = kraus_.size();
  if (b.rows() != m || b.cols() != m) {
    throw DimensionError("dual_complementary_apply: observable must be " + std::to_string(m) +
                         "x" + std::to_string(m) + " (environment dimension)");
  }
  ComplexMatrix out(dim_in_, dim_in_);
  for (std::size_t i = 0; i < m; ++i) {
    const ComplexMatrix vi = kraus_[i].adjoint();
    for (std::size_t j = 0; j < m; ++j) {
      out += b(i, j) * (vi * kraus_[j]);
    }
  }
  return out;
}

QuantumChannel synthesize_channel(const EffectBasis& effects) {
  try {
    validate_effect_basis(effects);
  } catch (const ValidationError& e) {
    throw ValidationError(std::string("synthesize_channel rejected input: ") + e.what());
  }
  const std::size_t n = effects.dim_h();
  const std::size_t d = effects.size();
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(d);
  for (std::size_t k = 0; k < d; ++k) {
    const ComplexMatrix root = psd_sqrt(effects.effects[k]);
    ComplexMatrix v(d * n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) v(k * n + r, c) = root(r, c);
    }
    kraus.push_back(std::move(v));
  }
  return QuantumChannel(std::move(kraus));
}

QuantumChannel complementary(const QuantumChannel& phi) {
  const std::size_t m = phi.kraus_count();
  const std::size_t n = phi.dim_in();
  std::vector<ComplexMatrix> rows;
  rows.reserve(phi.dim_out());
  for (std::size_t j = 0; j < phi.dim_out(); ++j) {
    ComplexMatrix w(m, n);
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t c = 0; c < n; ++c) w(k, c) = phi.kraus()[k](j, c);
    }
    if (w.frobenius_norm() > kZeroKrausTol) rows.push_back(std::move(w));
  }
  return QuantumChannel(std::move(rows));
}

ComplexMatrix choi(const QuantumChannel& phi) {
  const std::size_t n = phi.dim_in();
  const std::size_t dout = phi.dim_out();
  const std::size_t dim = n * dout;
  ComplexMatrix c(dim, dim);
  // Entry ((i,a),(j,b)) = sum_k V_k(a,i) conj(V_k(b,j)), accumulated as
  // rank-one layers; identical to assembling |i><j| (x) phi(|i><j|) blockwise.
  std::vector<complexd> w(dim);
  for (const auto& v : phi.kraus()) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t a = 0; a < dout; ++a) w[i * dout + a] = v(a, i);
    }
    for (std::size_t x = 0; x < dim; ++x) {
      const complexd wx = w[x];
      if (wx == complexd(0.0, 0.0)) continue;
      for (std::size_t y = 0; y < dim; ++y) {
        c(x, y) += wx * std::conj(w[y]);
      }
    }
  }
  return c;
}

QuantumChannel random_channel(std::size_t dim_in, std::size_t dim_out,
                              std::size_t kraus_count, std::uint64_t seed) {
  if (dim_in == 0 || dim_out == 0 || kraus_count == 0) {
    throw ParameterError("random_channel: dimensions must be at least 1");
  }
  if (kraus_count * dim_out < dim_in) {
    throw ParameterError("random_channel: kraus_count*dim_out = " +
                         std::to_string(kraus_count * dim_out) +
                         " cannot carry an isometry from dimension " + std::to_string(dim_in));
  }
  const std::size_t rows = kraus_count * dim_out;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  ComplexMatrix iso(rows, dim_in);
  for (std::size_t c = 0; c < dim_in; ++c) {
    std::vector<complexd> col(rows);
    for (;;) {
      for (auto& v : col) v = complexd(gauss(rng), gauss(rng));
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t p = 0; p < c; ++p) {
          complexd inner = 0.0;
          for (std::size_t r = 0; r < rows; ++r) inner += std::conj(iso(r, p)) * col[r];
          for (std::size_t r = 0; r < rows; ++r) col[r] -= inner * iso(r, p);
        }
      }
      double nrm = 0.0;
      for (const auto& v : col) nrm += std::norm(v);
      nrm = std::sqrt(nrm);
      if (nrm > 1e-8) {
        for (std::size_t r = 0; r < rows; ++r) iso(r, c) = col[r] / nrm;
        break;
      }
    }
  }

  std::vector<ComplexMatrix> kraus;
  kraus.reserve(kraus_count);
  for (std::size_t k = 0; k < kraus_count; ++k) {
    ComplexMatrix v(dim_out, dim_in);
    for (std::size_t r = 0; r < dim_out; ++r) {
      for (std::size_t c = 0; c < dim_in; ++c) v(r, c) = iso(k * dim_out + r, c);
    }
    kraus.push_back(std::move(v));
  }
  return QuantumChannel(std::move(kraus));
}

std::vector<CheckResult> check_channel(const QuantumChannel& phi, bool strict) {
  std::vector<CheckResult> out;
  const double tp_bound = (strict ? kTpTolStrict : kTpTolLoad) * double(phi.dim_in());
  const double tp = phi.tp_residual();
  out.push_back({"trace preservation", tp, tp_bound, tp <= tp_bound});

  double min_norm = phi.kraus().front().frobenius_norm();
  for (const auto& v : phi.kraus()) min_norm = std::min(min_norm, v.frobenius_norm());
  out.push_back({"nonzero kraus operators", min_norm, 1e-12, min_norm > 1e-12});

  if (strict) {
    const ComplexMatrix c = choi(phi);
    const auto vals = eigvals_hermitian(c);
    const double psd_bound = scaled_tol(kPsdTolFactor, c.frobenius_norm());
    out.push_back({"choi psd", vals.front(), -psd_bound, vals.front() >= -psd_bound});
    const double tr_res = distance_frobenius(
        partial_trace(c, phi.dim_in(), phi.dim_out(), TracedFactor::second),
        ComplexMatrix::identity(phi.dim_in()));
    const double tr_bound = 1e-9 * double(phi.dim_in());
    out.push_back({"choi partial trace", tr_res, tr_bound, tr_res <= tr_bound});
  }
  return out;
}

}  // namespace opgraph
