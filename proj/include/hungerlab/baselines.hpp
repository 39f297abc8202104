#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hungerlab/chain.hpp"
#include "hungerlab/engine.hpp"
#include "hungerlab/errors.hpp"
#include "hungerlab/rational.hpp"

namespace hungerlab {

// ---- Engel chip-firing ----

/// Chip counts c and per-state thresholds d. Firing at i gives c + d_i H_i.
struct ChipConfig {
    std::vector<std::int64_t> c;
    std::vector<std::int64_t> d;
};

/// d_i = lcd of row i, the smallest threshold that keeps chip counts integral.
inline std::vector<std::int64_t> default_thresholds(const MarkovChain<Rational>& chain) {
    std::vector<std::int64_t> d;
    for (std::size_t i = 0; i < chain.size(); ++i) d.push_back(lcd(chain.row(i)).get_si());
    return d;
}

struct EngelRun {
    std::vector<std::size_t> fired;     // every firing, in order
    std::vector<std::uint64_t> counts;  // firings between the two occurrences of the repeated config
    std::uint64_t repeat_start = 0;     // firing index at which the repeated config first appeared
    std::uint64_t period = 0;
    std::vector<std::int64_t> repeated;  // the repeated configuration
};

namespace detail {

/// Integer delta d_i H_i, validated against d_i P_ij being integral.
inline std::vector<std::vector<std::int64_t>> firing_deltas(const MarkovChain<Rational>& chain,
                                                            const std::vector<std::int64_t>& d) {
    const std::size_t n = chain.size();
    std::vector<std::vector<std::int64_t>> out(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        if (d[i] <= 0) throw Error(Errc::invalid_argument, "threshold d_" + std::to_string(i + 1) + " must be positive");
        for (std::size_t j = 0; j < n; ++j) {
            const Rational moved = chain.prob(i, j) * d[i];
            if (!is_integer(moved))
                throw Error(Errc::invalid_argument, "d_" + std::to_string(i + 1) + " * P[" + std::to_string(i + 1) + "][" +
                                                        std::to_string(j + 1) + "] is not an integer");
            out[i][j] = moved.get_num().get_si();
        }
        out[i][i] -= d[i];
    }
    return out;
}

}  // namespace detail

/// Fires the lowest eligible state (c_i >= d_i) until a configuration repeats.
inline EngelRun engel_run(const MarkovChain<Rational>& chain, ChipConfig c0, std::uint64_t cap = default_cap) {
    const std::size_t n = chain.size();
    if (c0.d.empty()) c0.d = default_thresholds(chain);
    if (c0.c.size() != n || c0.d.size() != n) throw Error(Errc::invalid_argument, "chip configuration has wrong length");
    for (auto x : c0.c)
        if (x < 0) throw Error(Errc::invalid_argument, "chip counts must be nonnegative");
    const auto delta = detail::firing_deltas(chain, c0.d);

    EngelRun out;
    std::map<std::vector<std::int64_t>, std::uint64_t> seen;
    auto c = std::move(c0.c);
    for (std::uint64_t step = 0;; ++step) {
        auto [it, fresh] = seen.try_emplace(c, step);
        if (!fresh) {
            out.repeat_start = it->second;
            out.period = step - it->second;
            out.counts.assign(n, 0);
            for (std::uint64_t s = out.repeat_start; s < step; ++s) ++out.counts[out.fired[s]];
            out.repeated = std::move(c);
            return out;
        }
        if (step >= cap) throw_cap_exceeded(cap);
        std::size_t i = 0;
        while (i < n && c[i] < c0.d[i]) ++i;
        if (i == n) throw Error(Errc::stabilized, "no state has at least d_i chips");
        for (std::size_t j = 0; j < n; ++j) c[j] += delta[i][j];
        out.fired.push_back(i);
    }
}

// ---- rotor-router ----

/// Out-edge lists ordered by target index, parallel edges contiguous; one rotor per state.
struct RotorState {
    std::vector<std::vector<std::size_t>> edges;
    std::vector<std::size_t> rotor;
    std::size_t chip = 0;

    RotorState(const MarkovChain<Rational>& chain, std::size_t start, std::vector<std::size_t> rotor_init = {})
        : rotor(std::move(rotor_init)), chip(start) {
        const std::size_t n = chain.size();
        if (start >= n) throw Error(Errc::invalid_argument, "start state out of range");
        const auto d = default_thresholds(chain);
        edges.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const Rational mult = chain.prob(i, j) * d[i];
                edges[i].insert(edges[i].end(), mult.get_num().get_ui(), j);
            }
        }
        if (rotor.empty()) rotor.assign(n, 0);
        if (rotor.size() != n) throw Error(Errc::invalid_argument, "rotor_init has wrong length");
        for (std::size_t i = 0; i < n; ++i)
            if (rotor[i] >= edges[i].size())
                throw Error(Errc::invalid_argument, "rotor_init for state " + std::to_string(i + 1) + " out of range");
    }

    std::size_t advance() {
        auto& r = rotor[chip];
        const std::size_t next = edges[chip][r];
        r = (r + 1) % edges[chip].size();
        chip = next;
        return next;
    }
};

struct RotorPeriod {
    std::uint64_t entry_steps = 0;
    std::uint64_t period = 0;
    std::vector<std::uint64_t> cycle_visits;
};

struct RotorRun {
    std::vector<std::size_t> itinerary;  // N + 1 positions, starting with `start`
    std::vector<std::uint64_t> visits;   // over all itinerary positions
    std::optional<RotorPeriod> periodic; // set once the joint (chip, rotors) state repeats within N steps
};

inline RotorRun rotor_run(const MarkovChain<Rational>& chain, std::size_t start, std::vector<std::size_t> rotor_init,
                          std::uint64_t steps) {
    RotorState state(chain, start, std::move(rotor_init));
    RotorRun out;
    out.itinerary.reserve(steps + 1);
    out.itinerary.push_back(start);
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::uint64_t> seen;
    seen.emplace(std::pair{state.chip, state.rotor}, 0);
    for (std::uint64_t s = 1; s <= steps; ++s) {
        out.itinerary.push_back(state.advance());
        if (out.periodic) continue;
        auto [it, fresh] = seen.try_emplace(std::pair{state.chip, state.rotor}, s);
        if (!fresh) {
            RotorPeriod p{it->second, s - it->second, std::vector<std::uint64_t>(chain.size(), 0)};
            for (std::uint64_t t = p.entry_steps; t < s; ++t) ++p.cycle_visits[out.itinerary[t]];
            out.periodic = std::move(p);
            seen.clear();
        }
    }
    out.visits.assign(chain.size(), 0);
    for (std::size_t x : out.itinerary) ++out.visits[x];
    return out;
}

// ---- two-state comparison ----

inline MarkovChain<Rational> two_state_chain(const Rational& q) {
    if (q <= 0 || q >= 1) throw Error(Errc::invalid_argument, "q must lie strictly between 0 and 1");
    Matrix<Rational> p(2, 2);
    p(0, 0) = 1 - q;
    p(0, 1) = q;
    p(1, 0) = q;
    p(1, 1) = 1 - q;
    return MarkovChain<Rational>(std::move(p));
}

struct CompareRow {
    std::uint64_t n;
    Rational hunger_dev;  // |v_1 / n - 1/2| after n hunger-game fires
    Rational rotor_dev;   // same for the rotor walk's first n arrivals
};

struct TwoStateComparison {
    std::vector<CompareRow> rows;        // n = 1..N
    std::vector<std::size_t> hunger_itinerary;
    std::vector<std::size_t> rotor_itinerary;  // arrivals only, start excluded
    bool hunger_alternates = false;
    Rational hunger_max;  // over n in [2, N]
    Rational rotor_max;
};

inline TwoStateComparison compare_two_state(const Rational& q, std::uint64_t steps) {
    const auto chain = two_state_chain(q);
    const auto hunger = run(chain, HungerVector<Rational>(2, Rational(0)), steps);
    const auto rotor = rotor_run(chain, 0, {}, steps);

    TwoStateComparison out;
    out.hunger_itinerary = hunger.fired;
    out.rotor_itinerary.assign(rotor.itinerary.begin() + 1, rotor.itinerary.end());
    out.hunger_alternates = true;
    for (std::size_t k = 0; k < out.hunger_itinerary.size(); ++k)
        if (out.hunger_itinerary[k] != k % 2) out.hunger_alternates = false;

    const Rational half(1, 2);
    std::uint64_t hunger_ones = 0, rotor_ones = 0;
    for (std::uint64_t k = 1; k <= steps; ++k) {
        hunger_ones += out.hunger_itinerary[k - 1] == 0;
        rotor_ones += out.rotor_itinerary[k - 1] == 0;
        const Rational denom(static_cast<unsigned long>(k));
        Rational h = Rational(static_cast<unsigned long>(hunger_ones)) / denom - half;
        Rational r = Rational(static_cast<unsigned long>(rotor_ones)) / denom - half;
        CompareRow row{k, abs(h), abs(r)};
        if (k >= 2) {
            if (row.hunger_dev > out.hunger_max) out.hunger_max = row.hunger_dev;
            if (row.rotor_dev > out.rotor_max) out.rotor_max = row.rotor_dev;
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

}  // namespace hungerlab
