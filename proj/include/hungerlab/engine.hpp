#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hungerlab/chain.hpp"
#include "hungerlab/errors.hpp"

namespace hungerlab {

template <Scalar T>
using HungerVector = std::vector<T>;

enum class StepKind {
    fire,      // chip moved to `state`, H_state added
    insert,    // chip placed at `state`, P_state added
    absorb,    // chip fired to absorbing `state` and was removed
    reinsert,  // chip removed from its absorbing state and placed at `state`
};

struct StepEvent {
    std::uint64_t step;
    StepKind kind;
    std::size_t state;
};

struct NoObserver {
    template <class H>
    void operator()(const StepEvent&, const H&) const noexcept {}
};

/// Record of one hunger-game run.
template <Scalar T>
struct FiringTrace {
    std::vector<std::size_t> fired;    // states fired to, in order
    std::vector<std::uint64_t> visits; // visit count per state
    HungerVector<T> initial_h;
    HungerVector<T> final_h;
    std::uint64_t steps = 0;
};

/// Smallest index attaining the maximum hunger.
template <Scalar T>
std::size_t hungriest_index(std::span<const T> h) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < h.size(); ++i)
        if (h[i] > h[best]) best = i;
    return best;
}

template <Scalar T>
std::size_t hungriest_index(const HungerVector<T>& h) {
    return hungriest_index(std::span<const T>(h));
}

/// h += H_i
template <Scalar T>
void add_hunger_row(const MarkovChain<T>& chain, HungerVector<T>& h, std::size_t i) {
    h[i] -= 1;
    for (std::size_t j : chain.successors(i)) h[j] += chain.prob(i, j);
}

/// h += P_i
template <Scalar T>
void add_transition_row(const MarkovChain<T>& chain, HungerVector<T>& h, std::size_t i) {
    for (std::size_t j : chain.successors(i)) h[j] += chain.prob(i, j);
}

template <Scalar T>
struct FireResult {
    HungerVector<T> h;
    std::size_t fired;
};

template <Scalar T>
FireResult<T> fire_step(const MarkovChain<T>& chain, HungerVector<T> h) {
    const std::size_t i = hungriest_index(h);
    add_hunger_row(chain, h, i);
    return {std::move(h), i};
}

template <Scalar T>
FiringTrace<T> empty_trace(std::size_t n, const HungerVector<T>& h0) {
    FiringTrace<T> t;
    t.visits.assign(n, 0);
    t.initial_h = h0;
    t.final_h = h0;
    return t;
}

template <Scalar T>
void check_hunger_size(const MarkovChain<T>& chain, const HungerVector<T>& h) {
    if (h.size() != chain.size())
        throw Error(Errc::invalid_argument, "hunger vector has " + std::to_string(h.size()) + " entries, chain has " +
                                                std::to_string(chain.size()) + " states");
}

/// Plain hunger game: `steps` greedy firings from h0, no chip insertion or removal.
template <Scalar T, class Observer = NoObserver>
FiringTrace<T> run(const MarkovChain<T>& chain, const HungerVector<T>& h0, std::uint64_t steps,
                   Observer&& observe = {}) {
    check_hunger_size(chain, h0);
    auto trace = empty_trace(chain.size(), h0);
    trace.fired.reserve(steps);
    auto& h = trace.final_h;
    for (std::uint64_t s = 1; s <= steps; ++s) {
        const std::size_t i = hungriest_index(h);
        add_hunger_row(chain, h, i);
        trace.fired.push_back(i);
        ++trace.visits[i];
        observe(StepEvent{s, StepKind::fire, i}, std::as_const(h));
    }
    trace.steps = steps;
    return trace;
}

template <Scalar T>
struct ChipAddResult {
    HungerVector<T> h;  // E_i(h)
    FiringTrace<T> trace;
};

/// Chip addition operator E_i: insert at i, fire greedily until an absorbing state takes the chip.
template <Scalar T, class Observer = NoObserver>
ChipAddResult<T> chip_add(const MarkovChain<T>& chain, const HungerVector<T>& h, std::size_t i,
                          std::uint64_t cap = default_cap, Observer&& observe = {}) {
    check_hunger_size(chain, h);
    if (chain.is_absorbing(i)) throw Error(Errc::i_is_absorbing, "cannot insert at absorbing " + chain.label(i));

    auto trace = empty_trace(chain.size(), h);
    auto& cur = trace.final_h;
    add_transition_row(chain, cur, i);
    observe(StepEvent{0, StepKind::insert, i}, std::as_const(cur));

    for (std::uint64_t s = 1;; ++s) {
        if (s > cap) throw_cap_exceeded(cap);
        const std::size_t j = hungriest_index(cur);
        trace.fired.push_back(j);
        ++trace.visits[j];
        trace.steps = s;
        if (chain.is_absorbing(j)) {
            cur[j] -= 1;  // H_j is zero; removing the chip subtracts P_j = e_j
            observe(StepEvent{s, StepKind::absorb, j}, std::as_const(cur));
            break;
        }
        add_hunger_row(chain, cur, j);
        observe(StepEvent{s, StepKind::fire, j}, std::as_const(cur));
    }
    return {cur, std::move(trace)};
}

template <Scalar T>
struct ReinsertionRun {
    FiringTrace<T> trace;
    T min_hunger;
    T max_hunger;
    std::uint64_t insertions = 0;
};

/// Hunger game on an absorbing chain where an absorbed chip is removed and reinserted
/// at the next schedule entry (cycling) in one combined step. Step 1 is the first insertion.
template <Scalar T, class Observer = NoObserver>
ReinsertionRun<T> run_with_reinsertion(const MarkovChain<T>& chain, const HungerVector<T>& h0,
                                       const std::vector<std::size_t>& schedule, std::uint64_t steps,
                                       std::uint64_t cap = default_cap, Observer&& observe = {}) {
    check_hunger_size(chain, h0);
    if (schedule.empty()) throw Error(Errc::invalid_argument, "insertion schedule is empty");
    for (std::size_t s : schedule) {
        if (s >= chain.size()) throw Error(Errc::invalid_argument, "schedule state out of range");
        if (chain.is_absorbing(s)) throw Error(Errc::i_is_absorbing, "cannot insert at absorbing " + chain.label(s));
    }

    ReinsertionRun<T> out{empty_trace(chain.size(), h0), *std::min_element(h0.begin(), h0.end()),
                          *std::max_element(h0.begin(), h0.end())};
    auto& h = out.trace.final_h;
    auto track = [&] {
        for (const auto& x : h) {
            if (x < out.min_hunger) out.min_hunger = x;
            if (x > out.max_hunger) out.max_hunger = x;
        }
    };

    bool has_chip = false;
    std::size_t location = 0;
    std::size_t next_insert = 0;
    std::uint64_t fires_since_insert = 0;
    for (std::uint64_t s = 1; s <= steps; ++s) {
        if (!has_chip || chain.is_absorbing(location)) {
            const std::size_t target = schedule[next_insert++ % schedule.size()];
            if (has_chip) h[location] -= 1;
            add_transition_row(chain, h, target);
            observe(StepEvent{s, has_chip ? StepKind::reinsert : StepKind::insert, target}, std::as_const(h));
            has_chip = true;
            location = target;
            fires_since_insert = 0;
            ++out.insertions;
        } else {
            if (++fires_since_insert > cap) throw_cap_exceeded(cap);
            const std::size_t j = hungriest_index(h);
            add_hunger_row(chain, h, j);
            out.trace.fired.push_back(j);
            ++out.trace.visits[j];
            location = j;
            observe(StepEvent{s, StepKind::fire, j}, std::as_const(h));
        }
        track();
    }
    out.trace.steps = steps;
    return out;
}

}  // namespace hungerlab
