// Copyright 2026 The qcommbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcb/state.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qcb/distribution.hpp"
#include "qcb/error.hpp"

namespace qcb {

double Distribution::total() const {
    double sum = 0.0;
    for (const auto &[_, p] : probs) {
        sum += p;
    }
    return sum;
}

void Distribution::validate(double tol) const {
    for (const auto &[outcome, p] : probs) {
        if (!(p >= 0.0)) {
            throw Error("Distribution: negative or NaN probability for outcome '" + outcome + "'");
        }
    }
    if (std::abs(total() - 1.0) > tol) {
        throw Error("Distribution: probabilities do not sum to 1");
    }
}

std::uint64_t CountsTable::counted() const {
    std::uint64_t sum = 0;
    for (const auto &[_, n] : counts) {
        sum += n;
    }
    return sum;
}

Distribution CountsTable::to_distribution() const {
    const std::uint64_t total = counted();
    if (total == 0) {
        throw Error("CountsTable: no counted shots");
    }
    Distribution d;
    for (const auto &[outcome, n] : counts) {
        d.probs[outcome] = static_cast<double>(n) / static_cast<double>(total);
    }
    return d;
}

QubitRegister::QubitRegister(std::vector<std::string> labels) : labels_(std::move(labels)) {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (std::find(labels_.begin() + static_cast<std::ptrdiff_t>(i) + 1, labels_.end(), labels_[i]) !=
            labels_.end()) {
            throw Error("QubitRegister: duplicate label '" + labels_[i] + "'");
        }
    }
}

bool QubitRegister::contains(const std::string &label) const {
    return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::size_t QubitRegister::index_of(const std::string &label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        throw Error("unknown qubit label '" + label + "'");
    }
    return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<std::size_t> QubitRegister::resolve(std::span<const std::string> targets) const {
    std::vector<std::size_t> out;
    out.reserve(targets.size());
    for (const auto &t : targets) {
        const std::size_t idx = index_of(t);
        if (std::find(out.begin(), out.end(), idx) != out.end()) {
            throw Error("duplicate target label '" + t + "'");
        }
        out.push_back(idx);
    }
    return out;
}

// ---------------------------------------------------------------------------
// PureState

PureState PureState::zero(std::vector<std::string> labels) {
    QubitRegister reg(std::move(labels));
    std::vector<cplx> amps(std::size_t{1} << reg.size());
    amps[0] = 1.0;
    return PureState(std::move(reg), std::move(amps));
}

PureState PureState::from_amplitudes(std::vector<std::string> labels, std::vector<cplx> amps) {
    QubitRegister reg(std::move(labels));
    if (amps.size() != (std::size_t{1} << reg.size())) {
        throw Error("PureState: amplitude count does not match qubit count");
    }
    PureState s(std::move(reg), std::move(amps));
    if (std::abs(s.norm_squared() - 1.0) > 1e-9) {
        throw Error("PureState: amplitudes are not normalized");
    }
    return s;
}

double PureState::norm_squared() const {
    double sum = 0.0;
    for (const auto &a : amps_) {
        sum += std::norm(a);
    }
    return sum;
}

void PureState::normalize() {
    const double n = std::sqrt(norm_squared());
    if (n == 0.0) {
        throw Error("PureState: cannot normalize the zero vector");
    }
    for (auto &a : amps_) {
        a /= n;
    }
}

double PureState::fidelity(const PureState &other) const {
    if (qubits_.labels() != other.qubits_.labels()) {
        throw Error("PureState::fidelity: registers differ");
    }
    cplx overlap{};
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        overlap += std::conj(amps_[i]) * other.amps_[i];
    }
    return std::norm(overlap);
}

// ---------------------------------------------------------------------------
// MixedState

MixedState MixedState::zero(std::vector<std::string> labels) {
    QubitRegister reg(std::move(labels));
    const std::size_t dim = std::size_t{1} << reg.size();
    std::vector<cplx> rho(dim * dim);
    rho[0] = 1.0;
    return MixedState(std::move(reg), std::move(rho));
}

MixedState MixedState::from_pure(const PureState &psi) {
    const auto amps = psi.amplitudes();
    const std::size_t dim = amps.size();
    std::vector<cplx> rho(dim * dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            rho[r * dim + c] = amps[r] * std::conj(amps[c]);
        }
    }
    return MixedState(psi.qubits(), std::move(rho));
}

MixedState MixedState::from_matrix(std::vector<std::string> labels, const Matrix &rho) {
    QubitRegister reg(std::move(labels));
    const std::size_t dim = std::size_t{1} << reg.size();
    if (rho.rows() != dim || rho.cols() != dim) {
        throw Error("MixedState: matrix dimension does not match qubit count");
    }
    MixedState s(std::move(reg), std::vector<cplx>(rho.data().begin(), rho.data().end()));
    if (s.hermiticity_error() > 1e-9) {
        throw Error("MixedState: matrix is not Hermitian");
    }
    if (std::abs(s.trace() - 1.0) > 1e-9) {
        throw Error("MixedState: trace is not 1");
    }
    return s;
}

cplx MixedState::trace() const {
    cplx t{};
    for (std::size_t i = 0; i < dim(); ++i) {
        t += rho_[i * dim() + i];
    }
    return t;
}

Matrix MixedState::to_matrix() const {
    Matrix m(dim(), dim());
    for (std::size_t r = 0; r < dim(); ++r) {
        for (std::size_t c = 0; c < dim(); ++c) {
            m(r, c) = rho_[r * dim() + c];
        }
    }
    return m;
}

double MixedState::fidelity(const PureState &psi) const {
    if (qubits_.labels() != psi.qubits().labels()) {
        throw Error("MixedState::fidelity: registers differ");
    }
    const auto a = psi.amplitudes();
    cplx acc{};
    for (std::size_t r = 0; r < dim(); ++r) {
        if (a[r] == cplx{}) {
            continue;
        }
        cplx row{};
        for (std::size_t c = 0; c < dim(); ++c) {
            row += rho_[r * dim() + c] * a[c];
        }
        acc += std::conj(a[r]) * row;
    }
    return acc.real();
}

double MixedState::hermiticity_error() const {
    double worst = 0.0;
    for (std::size_t r = 0; r < dim(); ++r) {
        for (std::size_t c = r; c < dim(); ++c) {
            worst = std::max(worst, std::abs(rho_[r * dim() + c] - std::conj(rho_[c * dim() + r])));
        }
    }
    return worst;
}

// ---------------------------------------------------------------------------
// KrausChannel

KrausChannel::KrausChannel(std::vector<Matrix> operators, std::size_t arity) : ops_(std::move(operators)), arity_(arity) {
    if (ops_.empty()) {
        throw Error("KrausChannel: no operators");
    }
    const std::size_t dim = std::size_t{1} << arity_;
    for (const auto &k : ops_) {
        if (k.rows() != dim || k.cols() != dim) {
            throw Error("KrausChannel: operator dimension does not match arity");
        }
    }
    if (completeness_error() > kStateTol) {
        throw Error("KrausChannel: operators are not complete (sum K^dag K != I)");
    }

    mixed_unitary_ = true;
    for (const auto &k : ops_) {
        const Matrix kk = k.adjoint() * k;
        const double w = kk(0, 0).real();
        weights_.push_back(w);
        if (!kk.approx_equal(Matrix::identity(dim) * w, 1e-12)) {
            mixed_unitary_ = false;
        }
    }
    if (!mixed_unitary_) {
        weights_.clear();
    }

    superop_ = Matrix(dim * dim, dim * dim);
    for (const auto &k : ops_) {
        superop_ = superop_ + k.kron(k.conjugate());
    }
}

KrausChannel KrausChannel::identity(std::size_t arity) {
    return KrausChannel({Matrix::identity(std::size_t{1} << arity)}, arity);
}

KrausChannel KrausChannel::from_unitary(const Matrix &u) {
    if (!u.is_unitary(kUnitaryTol)) {
        throw Error("KrausChannel::from_unitary: matrix is not unitary");
    }
    std::size_t arity = 0;
    while ((std::size_t{1} << arity) < u.rows()) {
        ++arity;
    }
    return KrausChannel({u}, arity);
}

double KrausChannel::completeness_error() const {
    const std::size_t dim = std::size_t{1} << arity_;
    Matrix sum(dim, dim);
    for (const auto &k : ops_) {
        sum = sum + k.adjoint() * k;
    }
    return sum.max_abs_diff(Matrix::identity(dim));
}

// ---------------------------------------------------------------------------
// Evolution

namespace {

void check_unitary(const Matrix &u, std::size_t targets) {
    if (u.rows() != (std::size_t{1} << targets) || !u.is_square()) {
        throw Error("apply_unitary: matrix dimension does not match target count");
    }
    if (!u.is_unitary(kUnitaryTol)) {
        throw Error("apply_unitary: matrix is not unitary");
    }
}

void apply_superop(MixedState &state, const Matrix &superop, std::span<const std::string> targets) {
    const auto idx = state.qubits().resolve(targets);
    const std::size_t n = state.num_qubits();
    std::vector<std::size_t> bits;
    bits.reserve(2 * idx.size());
    for (std::size_t i : idx) {
        bits.push_back(n + (n - 1 - i));
    }
    for (std::size_t i : idx) {
        bits.push_back(n - 1 - i);
    }
    detail::apply_matrix(state.mutable_entries(), 2 * n, bits, superop);
}

}  // namespace

void apply_unitary(PureState &state, const Matrix &u, std::span<const std::string> targets) {
    check_unitary(u, targets.size());
    const auto idx = state.qubits().resolve(targets);
    std::vector<std::size_t> bits;
    for (std::size_t i : idx) {
        bits.push_back(state.num_qubits() - 1 - i);
    }
    detail::apply_matrix(state.mutable_amplitudes(), state.num_qubits(), bits, u);
}

void apply_unitary(MixedState &state, const Matrix &u, std::span<const std::string> targets) {
    check_unitary(u, targets.size());
    apply_superop(state, u.kron(u.conjugate()), targets);
}

void apply_channel(MixedState &state, const KrausChannel &channel, std::span<const std::string> targets) {
    if (channel.arity() != targets.size()) {
        throw Error("apply_channel: channel arity does not match target count");
    }
    apply_superop(state, channel.superoperator(), targets);
}

MixedState partial_trace(const MixedState &state, std::span<const std::string> keep) {
    if (keep.empty()) {
        throw Error("partial_trace: keep set is empty");
    }
    auto kept = state.qubits().resolve(keep);
    std::sort(kept.begin(), kept.end());
    const std::size_t n = state.num_qubits();
    std::vector<std::size_t> traced;
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::binary_search(kept.begin(), kept.end(), i)) {
            traced.push_back(i);
        }
    }

    std::vector<std::string> labels;
    for (std::size_t i : kept) {
        labels.push_back(state.qubits().labels()[i]);
    }

    const std::size_t m = kept.size();
    const std::size_t kdim = std::size_t{1} << m;
    const std::size_t tdim = std::size_t{1} << traced.size();
    auto compose = [&](std::size_t k, std::size_t t) {
        std::size_t full = 0;
        for (std::size_t j = 0; j < m; ++j) {
            if ((k >> (m - 1 - j)) & 1) {
                full |= std::size_t{1} << (n - 1 - kept[j]);
            }
        }
        for (std::size_t j = 0; j < traced.size(); ++j) {
            if ((t >> (traced.size() - 1 - j)) & 1) {
                full |= std::size_t{1} << (n - 1 - traced[j]);
            }
        }
        return full;
    };

    Matrix out(kdim, kdim);
    for (std::size_t t = 0; t < tdim; ++t) {
        for (std::size_t r = 0; r < kdim; ++r) {
            const std::size_t fr = compose(r, t);
            for (std::size_t c = 0; c < kdim; ++c) {
                out(r, c) += state(fr, compose(c, t));
            }
        }
    }
    return MixedState::from_matrix(std::move(labels), out);
}

}  // namespace qcb
