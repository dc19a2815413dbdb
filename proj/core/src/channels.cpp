/*
   Copyright 2026 The qeccov Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "qeccov/channels.hpp"

#include <cmath>
#include <sstream>

namespace qeccov {

KrausChannel::KrausChannel(Index d_in, Index d_out, std::vector<Matrix> kraus)
    : d_in_(d_in), d_out_(d_out), kraus_(std::move(kraus)) {
  if (d_in_ <= 0 || d_out_ <= 0)
    throw dimension_error("KrausChannel: dimensions must be positive");
  if (kraus_.empty()) throw invariant_error("KrausChannel: Kraus list must be nonempty");
  for (size_t i = 0; i < kraus_.size(); ++i) {
    const Matrix& k = kraus_[i];
    if (k.rows() != d_out_ || k.cols() != d_in_) {
      std::ostringstream os;
      os << "KrausChannel: operator " << i << " is " << k.rows() << "x" << k.cols()
         << ", expected " << d_out_ << "x" << d_in_;
      throw dimension_error(os.str());
    }
    if (!all_finite(k)) throw invariant_error("KrausChannel: entries must be finite");
  }
  Matrix acc = Matrix::Zero(d_in_, d_in_);
  for (const Matrix& k : kraus_) acc += k.adjoint() * k;
  const double dev = max_abs(acc - identity(d_in_));
  if (dev > tols().completeness) {
    std::ostringstream os;
    os << "KrausChannel: |sum K†K - 1| = " << dev << " exceeds " << tols().completeness;
    throw invariant_error(os.str());
  }
}

Isometry::Isometry(Matrix w) : w_(std::move(w)) {
  if (w_.rows() < w_.cols() || w_.cols() <= 0)
    throw dimension_error("Isometry: need d_S >= d_L >= 1");
  if (!all_finite(w_)) throw invariant_error("Isometry: entries must be finite");
  const double dev = max_abs(Matrix(w_.adjoint() * w_) - identity(w_.cols()));
  if (dev > tols().isometry) {
    std::ostringstream os;
    os << "Isometry: |W†W - 1| = " << dev << " exceeds " << tols().isometry;
    throw invariant_error(os.str());
  }
}

KrausChannel Isometry::channel() const {
  return KrausChannel(d_L(), d_S(), {w_});
}

Matrix Isometry::code_projector() const { return w_ * w_.adjoint(); }

DensityMatrix apply(const KrausChannel& channel, const DensityMatrix& rho) {
  if (rho.dim() != channel.d_in()) {
    std::ostringstream os;
    os << "apply: state dim " << rho.dim() << " != channel d_in " << channel.d_in();
    throw dimension_error(os.str());
  }
  Matrix out = Matrix::Zero(channel.d_out(), channel.d_out());
  for (const Matrix& k : channel.kraus()) out += k * rho.matrix() * k.adjoint();
  return DensityMatrix(hermitize(out));
}

KrausChannel compose(const KrausChannel& outer, const KrausChannel& inner) {
  if (inner.d_out() != outer.d_in()) {
    std::ostringstream os;
    os << "compose: inner d_out " << inner.d_out() << " != outer d_in " << outer.d_in();
    throw dimension_error(os.str());
  }
  std::vector<Matrix> ops;
  ops.reserve(static_cast<size_t>(outer.size() * inner.size()));
  for (Index i = 0; i < outer.size(); ++i)
    for (Index s = 0; s < inner.size(); ++s) ops.push_back(outer[i] * inner[s]);
  return KrausChannel(inner.d_in(), outer.d_out(), std::move(ops));
}

Stinespring stinespring(const KrausChannel& channel) {
  const Index d_e = channel.size();
  const Index d_out = channel.d_out();
  Matrix v = Matrix::Zero(d_out * d_e, channel.d_in());
  for (Index e = 0; e < d_e; ++e)
    for (Index s = 0; s < d_out; ++s) v.row(s * d_e + e) = channel[e].row(s);
  return Stinespring{Isometry(std::move(v)), d_e};
}

PureState maximally_entangled(Index d) {
  if (d < 1) throw dimension_error("maximally_entangled: d must be >= 1");
  Vector amp = Vector::Zero(d * d);
  const double c = 1.0 / std::sqrt(static_cast<double>(d));
  for (Index k = 0; k < d; ++k) amp(k * d + k) = c;
  return PureState(std::move(amp));
}

namespace {

double get_param(const std::map<std::string, double>& params, const std::string& key,
                 const std::string& channel_name) {
  auto it = params.find(key);
  if (it == params.end())
    throw config_error("builtin channel '" + channel_name + "' needs parameter '" + key + "'");
  return it->second;
}

double get_probability(const std::map<std::string, double>& params, const std::string& key,
                       const std::string& channel_name) {
  const double p = get_param(params, key, channel_name);
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream os;
    os << "builtin channel '" << channel_name << "': parameter '" << key << "' = " << p
       << " out of [0, 1]";
    throw config_error(os.str());
  }
  return p;
}

}  // namespace

KrausChannel builtin_channel(const std::string& name,
                             const std::map<std::string, double>& params) {
  if (name == "identity") {
    Index d = 2;
    if (auto it = params.find("d"); it != params.end()) {
      d = static_cast<Index>(it->second);
      if (d < 1 || static_cast<double>(d) != it->second)
        throw config_error("builtin channel 'identity': d must be a positive integer");
    }
    return KrausChannel(d, d, {identity(d)});
  }
  if (name == "dephasing") {
    const double p = get_probability(params, "p", name);
    std::vector<Matrix> ops;
    ops.push_back(std::sqrt(1.0 - p / 2.0) * identity(2));
    ops.push_back(std::sqrt(p / 2.0) * pauli_z());
    return KrausChannel(2, 2, std::move(ops));
  }
  if (name == "bit_flip") {
    const double p = get_probability(params, "p", name);
    std::vector<Matrix> ops;
    ops.push_back(std::sqrt(1.0 - p) * identity(2));
    ops.push_back(std::sqrt(p) * pauli_x());
    return KrausChannel(2, 2, std::move(ops));
  }
  if (name == "depolarizing") {
    const double p = get_probability(params, "p", name);
    std::vector<Matrix> ops;
    ops.push_back(std::sqrt(1.0 - 3.0 * p / 4.0) * identity(2));
    ops.push_back(std::sqrt(p / 4.0) * pauli_x());
    ops.push_back(std::sqrt(p / 4.0) * pauli_y());
    ops.push_back(std::sqrt(p / 4.0) * pauli_z());
    return KrausChannel(2, 2, std::move(ops));
  }
  if (name == "amplitude_damping") {
    const double g = get_probability(params, "gamma", name);
    Matrix k0 = Matrix::Zero(2, 2);
    k0(0, 0) = 1.0;
    k0(1, 1) = std::sqrt(1.0 - g);
    Matrix k1 = Matrix::Zero(2, 2);
    k1(0, 1) = std::sqrt(g);
    return KrausChannel(2, 2, {std::move(k0), std::move(k1)});
  }
  if (name == "single_site")
    throw config_error("builtin channel 'single_site' needs a channel name; use "
                       "single_site_channel(name, params, site, n_qubits)");
  throw config_error("unknown builtin channel '" + name + "'");
}

KrausChannel single_site_channel(const std::string& name,
                                 const std::map<std::string, double>& params,
                                 int site, int n_qubits) {
  if (n_qubits < 1) throw config_error("single_site: n_qubits must be >= 1");
  if (site < 0 || site >= n_qubits)
    throw config_error("single_site: site out of range [0, n_qubits)");
  const KrausChannel base = builtin_channel(name, params);
  if (base.d_in() != 2 || base.d_out() != 2)
    throw config_error("single_site: inner channel must act on a qubit");
  const Index left = Index{1} << site;
  const Index right = Index{1} << (n_qubits - site - 1);
  std::vector<Matrix> ops;
  ops.reserve(static_cast<size_t>(base.size()));
  for (const Matrix& k : base.kraus())
    ops.push_back(kron(kron(identity(left), k), identity(right)));
  const Index d = Index{1} << n_qubits;
  return KrausChannel(d, d, std::move(ops));
}

}  // namespace qeccov
