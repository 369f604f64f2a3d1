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

#include "qcb/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <set>
#include <thread>
#include <tuple>

#include "qcb/error.hpp"
#include "qcb/rng.hpp"

namespace qcb {

namespace {

/// One step of the noisy schedule: either a unitary or a channel.
struct Step {
    std::size_t gate_index;
    std::vector<std::string> targets;
    std::optional<Matrix> unitary;
    const KrausChannel *channel = nullptr;
};

/// Circuit lowered to unitaries and channels with noise inserted per gate.
class NoisySchedule {
  public:
    NoisySchedule(const Circuit &circuit, const NoiseModel &noise) {
        noise.validate();
        for (std::size_t gi = 0; gi < circuit.gates().size(); ++gi) {
            const Gate &g = circuit.gates()[gi];
            if (!is_unitary_kind(g.kind)) {
                continue;
            }
            steps_.push_back({gi, g.targets, gate_matrix(g.kind, g.phi), nullptr});

            const bool idle = g.kind == GateKind::I || g.kind == GateKind::U_PHASE;
            const double p = g.kind == GateKind::CNOT ? noise.p2q : (idle && !noise.depolarize_idle_gates ? 0.0 : noise.p1q);
            if (p > 0.0) {
                steps_.push_back({gi, g.targets, std::nullopt, depolarizing(p, g.targets.size())});
            }
            if (g.duration_ns > 0.0) {
                for (const auto &q : g.targets) {
                    const auto &t = noise.times(q);
                    if (std::isinf(t.t1_us) && std::isinf(t.t2_us)) {
                        continue;
                    }
                    steps_.push_back({gi, {q}, std::nullopt, damping(g.duration_ns, t)});
                }
            }
            if (noise.drift && g.kind == GateKind::I && g.targets[0] == noise.drift->target && g.duration_ns > 0.0) {
                steps_.push_back({gi, g.targets, drift_phase(g.duration_ns, *noise.drift), nullptr});
            }
        }
    }

    const std::vector<Step> &steps() const noexcept {
        return steps_;
    }

  private:
    const KrausChannel *depolarizing(double p, std::size_t arity) {
        auto key = std::make_pair(p, arity);
        auto it = depolarizing_.find(key);
        if (it == depolarizing_.end()) {
            it = depolarizing_.emplace(key, std::make_unique<KrausChannel>(depolarizing_channel(p, arity))).first;
        }
        return it->second.get();
    }

    const KrausChannel *damping(double ns, const CoherenceTimes &t) {
        auto key = std::make_tuple(ns, t.t1_us, t.t2_us);
        auto it = damping_.find(key);
        if (it == damping_.end()) {
            it = damping_.emplace(key, std::make_unique<KrausChannel>(damping_channel(ns, t.t1_us, t.t2_us))).first;
        }
        return it->second.get();
    }

    std::vector<Step> steps_;
    std::map<std::pair<double, std::size_t>, std::unique_ptr<KrausChannel>> depolarizing_;
    std::map<std::tuple<double, double, double>, std::unique_ptr<KrausChannel>> damping_;
};

/// rho (x) |0><0| with `label` appended as the least significant qubit.
MixedState append_zero_qubit(const MixedState &state, const std::string &label) {
    std::vector<std::string> labels = state.qubits().labels();
    labels.push_back(label);
    const std::size_t dim = state.dim();
    Matrix rho(2 * dim, 2 * dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            rho(2 * r, 2 * c) = state(r, c);
        }
    }
    return MixedState::from_matrix(std::move(labels), rho);
}

MixedState evolve_with_retirement(const Circuit &circuit, const NoisySchedule &schedule, const SimOptions &options) {
    std::map<std::string, std::size_t> last_use;
    for (std::size_t gi = 0; gi < circuit.gates().size(); ++gi) {
        for (const auto &q : circuit.gates()[gi].targets) {
            last_use[q] = gi;
        }
    }
    const auto measured = circuit.measured_qubits();
    const std::set<std::string> keep_forever(measured.begin(), measured.end());

    std::optional<MixedState> state;
    std::size_t peak = 0;
    auto ensure_live = [&](const std::string &q) {
        if (!state) {
            state = MixedState::zero({q});
        } else if (!state->qubits().contains(q)) {
            state = append_zero_qubit(*state, q);
        }
        peak = std::max(peak, state->num_qubits());
        if (peak > options.density_qubit_cap) {
            throw CapacityError("evolve_density: " + std::to_string(peak) + " live qubits exceed the density cap of " +
                                std::to_string(options.density_qubit_cap) + "; use the trajectory backend");
        }
    };
    auto retire_after = [&](std::size_t gi) {
        for (const auto &q : circuit.gates()[gi].targets) {
            if (last_use[q] != gi || keep_forever.count(q) || !state || !state->qubits().contains(q)) {
                continue;
            }
            if (state->num_qubits() == 1) {
                continue;
            }
            std::vector<std::string> keep;
            for (const auto &l : state->qubits().labels()) {
                if (l != q) {
                    keep.push_back(l);
                }
            }
            state = partial_trace(*state, keep);
        }
    };

    const auto &steps = schedule.steps();
    std::size_t si = 0;
    for (std::size_t gi = 0; gi < circuit.gates().size(); ++gi) {
        const Gate &g = circuit.gates()[gi];
        if (g.kind != GateKind::BARRIER) {
            for (const auto &q : g.targets) {
                ensure_live(q);
            }
        }
        for (; si < steps.size() && steps[si].gate_index == gi; ++si) {
            if (steps[si].unitary) {
                apply_unitary(*state, *steps[si].unitary, steps[si].targets);
            } else {
                apply_channel(*state, *steps[si].channel, steps[si].targets);
            }
        }
        retire_after(gi);
    }
    if (!state) {
        return MixedState::zero(circuit.qubits().empty() ? std::vector<std::string>{} : circuit.qubits());
    }
    return *std::move(state);
}

}  // namespace

MixedState evolve_density(const Circuit &circuit, const NoiseModel &noise, const SimOptions &options) {
    const NoisySchedule schedule(circuit, noise);
    if (options.retire_idle_qubits) {
        return evolve_with_retirement(circuit, schedule, options);
    }
    if (circuit.qubits().size() > options.density_qubit_cap) {
        throw CapacityError("evolve_density: " + std::to_string(circuit.qubits().size()) +
                            " qubits exceed the density cap of " + std::to_string(options.density_qubit_cap) +
                            "; use the trajectory backend");
    }
    MixedState state = MixedState::zero(circuit.qubits());
    for (const auto &step : schedule.steps()) {
        if (step.unitary) {
            apply_unitary(state, *step.unitary, step.targets);
        } else {
            apply_channel(state, *step.channel, step.targets);
        }
    }
    return state;
}

Distribution measurement_distribution(const MixedState &state, std::span<const std::string> measured,
                                      const ReadoutModel &readout) {
    const std::size_t m = measured.size();
    const auto idx = state.qubits().resolve(measured);
    std::vector<ReadoutError> errors;
    for (const auto &q : measured) {
        errors.push_back(readout.at(q));
    }

    // Marginal over measured bits; bit i of the local index (MSB first) is measured[i].
    const std::size_t n = state.num_qubits();
    std::vector<double> probs(std::size_t{1} << m, 0.0);
    for (std::size_t b = 0; b < state.dim(); ++b) {
        std::size_t local = 0;
        for (std::size_t i = 0; i < m; ++i) {
            local = (local << 1) | ((b >> (n - 1 - idx[i])) & 1);
        }
        probs[local] += std::max(0.0, state(b, b).real());
    }

    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t bit = std::size_t{1} << (m - 1 - i);
        const double e0 = errors[i].p1_given_0;
        const double e1 = errors[i].p0_given_1;
        for (std::size_t j = 0; j < probs.size(); ++j) {
            if (j & bit) {
                continue;
            }
            const double p0 = probs[j];
            const double p1 = probs[j | bit];
            probs[j] = (1.0 - e0) * p0 + e1 * p1;
            probs[j | bit] = e0 * p0 + (1.0 - e1) * p1;
        }
    }

    Distribution d;
    for (std::size_t j = 0; j < probs.size(); ++j) {
        std::string key(m, '0');
        for (std::size_t i = 0; i < m; ++i) {
            if ((j >> (m - 1 - i)) & 1) {
                key[i] = '1';
            }
        }
        d.probs[key] = probs[j];
    }
    return d;
}

Distribution exact_distribution(const Circuit &circuit, const NoiseModel &noise, const SimOptions &options) {
    const auto state = evolve_density(circuit, noise, options);
    const auto measured = circuit.measured_qubits();
    return measurement_distribution(state, measured, noise.readout);
}

namespace {

void apply_channel_sampled(PureState &psi, const KrausChannel &channel, std::span<const std::string> targets,
                           Rng &rng, PureState &scratch) {
    const auto &ops = channel.operators();
    const double u = rng.uniform();
    if (channel.is_mixed_unitary()) {
        const auto &w = channel.weights();
        std::size_t pick = ops.size() - 1;
        double acc = 0.0;
        for (std::size_t i = 0; i < ops.size(); ++i) {
            acc += w[i];
            if (u < acc) {
                pick = i;
                break;
            }
        }
        auto amps = psi.mutable_amplitudes();
        const auto idx = psi.qubits().resolve(targets);
        std::vector<std::size_t> bits;
        for (std::size_t i : idx) {
            bits.push_back(psi.num_qubits() - 1 - i);
        }
        detail::apply_matrix(amps, psi.num_qubits(), bits, ops[pick] * (1.0 / std::sqrt(w[pick])));
        return;
    }

    const auto idx = psi.qubits().resolve(targets);
    std::vector<std::size_t> bits;
    for (std::size_t i : idx) {
        bits.push_back(psi.num_qubits() - 1 - i);
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < ops.size(); ++i) {
        scratch = psi;
        detail::apply_matrix(scratch.mutable_amplitudes(), scratch.num_qubits(), bits, ops[i]);
        const double p = scratch.norm_squared();
        acc += p;
        if (u < acc || i + 1 == ops.size()) {
            if (p <= 0.0) {
                continue;
            }
            scratch.normalize();
            std::swap(psi, scratch);
            return;
        }
    }
    // Only reachable when the tail operators annihilate the state; fall back
    // to the last operator with nonzero weight.
    for (std::size_t i = ops.size(); i-- > 0;) {
        scratch = psi;
        detail::apply_matrix(scratch.mutable_amplitudes(), scratch.num_qubits(), bits, ops[i]);
        if (scratch.norm_squared() > 0.0) {
            scratch.normalize();
            std::swap(psi, scratch);
            return;
        }
    }
    throw Error("run_trajectories: channel annihilated the state");
}

std::string sample_shot(const Circuit &circuit, const NoisySchedule &schedule, const std::vector<std::size_t> &measured,
                        const std::vector<ReadoutError> &readout, Rng &rng) {
    PureState psi = PureState::zero(circuit.qubits());
    PureState scratch = psi;
    for (const auto &step : schedule.steps()) {
        if (step.unitary) {
            apply_unitary(psi, *step.unitary, step.targets);
        } else {
            apply_channel_sampled(psi, *step.channel, step.targets, rng, scratch);
        }
    }

    const auto amps = psi.amplitudes();
    const double u = rng.uniform();
    std::size_t basis = amps.size() - 1;
    double acc = 0.0;
    for (std::size_t b = 0; b < amps.size(); ++b) {
        acc += std::norm(amps[b]);
        if (u < acc) {
            basis = b;
            break;
        }
    }

    const std::size_t n = psi.num_qubits();
    std::string bits(measured.size(), '0');
    for (std::size_t i = 0; i < measured.size(); ++i) {
        const bool one = (basis >> (n - 1 - measured[i])) & 1;
        const double flip = one ? readout[i].p0_given_1 : readout[i].p1_given_0;
        const bool read = rng.bernoulli(flip) ? !one : one;
        bits[i] = read ? '1' : '0';
    }
    return bits;
}

}  // namespace

CountsTable run_trajectories(const Circuit &circuit, const NoiseModel &noise, std::uint64_t shots,
                             std::uint64_t seed, const SimOptions &options) {
    if (shots == 0) {
        throw Error("run_trajectories: shots must be >= 1");
    }
    if (circuit.qubits().size() > options.trajectory_qubit_cap) {
        throw CapacityError("run_trajectories: " + std::to_string(circuit.qubits().size()) +
                            " qubits exceed the trajectory cap of " + std::to_string(options.trajectory_qubit_cap));
    }
    const NoisySchedule schedule(circuit, noise);
    const QubitRegister reg(circuit.qubits());
    const auto measured_labels = circuit.measured_qubits();
    const auto measured = reg.resolve(measured_labels);
    std::vector<ReadoutError> readout;
    for (const auto &q : measured_labels) {
        readout.push_back(noise.readout.at(q));
    }

    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, shots));

    std::vector<std::map<std::string, std::uint64_t>> partial(threads);
    auto worker = [&](unsigned w) {
        for (std::uint64_t shot = w; shot < shots; shot += threads) {
            Rng rng(Rng::derive_seed(seed, shot));
            ++partial[w][sample_shot(circuit, schedule, measured, readout, rng)];
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w) {
            pool.emplace_back(worker, w);
        }
        for (auto &t : pool) {
            t.join();
        }
    }

    CountsTable out;
    out.shots = shots;
    for (const auto &p : partial) {
        for (const auto &[k, v] : p) {
            out.counts[k] += v;
        }
    }
    return out;
}

}  // namespace qcb
