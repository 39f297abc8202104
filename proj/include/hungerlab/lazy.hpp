#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hungerlab/engine.hpp"
#include "hungerlab/rational.hpp"

namespace hungerlab {

using LazyRow = std::vector<std::pair<std::size_t, Rational>>;

/// A countable chain enumerated by natural-number indices. The enumeration order is
/// the tie-breaking order; every row has finitely many targets.
template <class C>
concept LazyChain = requires(const C& c, std::size_t i) {
    { c.row(i) } -> std::convertible_to<LazyRow>;
    { c.is_absorbing(i) } -> std::convertible_to<bool>;
    { c.label(i) } -> std::convertible_to<std::string>;
};

/// Hunger on finitely many tracked states; all other states have hunger 0.
using SparseHunger = std::map<std::size_t, Rational>;

/// States -1 and 0 absorbing; state i >= 1 moves to i-2 or i+1 with probability 1/2.
/// Enumeration: state s has index s + 1.
struct GoldbugChain {
    static std::size_t index_of(long state) { return static_cast<std::size_t>(state + 1); }
    static long state_of(std::size_t index) { return static_cast<long>(index) - 1; }

    LazyRow row(std::size_t i) const {
        if (is_absorbing(i)) return {{i, Rational(1)}};
        return {{i - 2, Rational(1, 2)}, {i + 1, Rational(1, 2)}};
    }
    bool is_absorbing(std::size_t i) const { return i <= 1; }
    std::string label(std::size_t i) const { return std::to_string(state_of(i)); }
};

/// States v(i,j) for i >= j >= 0. v(0,0) absorbing, v(i,i) -> v(0,0), and v(i,j) with
/// j < i moves uniformly to v(i,k) for j < k <= i. Enumeration is row-major in (i,j).
struct HarmonicChain {
    static std::size_t index_of(std::size_t i, std::size_t j) { return i * (i + 1) / 2 + j; }
    static std::pair<std::size_t, std::size_t> state_of(std::size_t index) {
        std::size_t i = 0;
        while (index_of(i + 1, 0) <= index) ++i;
        return {i, index - index_of(i, 0)};
    }

    LazyRow row(std::size_t index) const {
        const auto [i, j] = state_of(index);
        if (i == j) return {{0, Rational(1)}};
        LazyRow out;
        for (std::size_t k = j + 1; k <= i; ++k) out.emplace_back(index_of(i, k), Rational(1, static_cast<unsigned long>(i - j)));
        return out;
    }
    bool is_absorbing(std::size_t index) const { return index == 0; }
    std::string label(std::size_t index) const {
        const auto [i, j] = state_of(index);
        return "v" + std::to_string(i) + "_" + std::to_string(j);
    }
};

struct LazyTrace {
    std::vector<std::size_t> fired;
    SparseHunger final_h;
    bool absorbed = false;
    std::uint64_t steps = 0;
};

struct NoLazyObserver {
    void operator()(const StepEvent&, const SparseHunger&, std::span<const std::size_t>) const noexcept {}
};

namespace detail {

inline std::size_t smallest_untracked(const SparseHunger& h) {
    std::size_t expect = 0;
    for (const auto& [k, v] : h) {
        if (k != expect) break;
        ++expect;
    }
    return expect;
}

/// Hungriest state: tracked entries plus the smallest untracked index standing in for all
/// untracked states (they tie at 0).
inline std::size_t sparse_hungriest(const SparseHunger& h) {
    const std::size_t untracked = smallest_untracked(h);
    std::size_t best = untracked;
    Rational best_value = 0;
    for (const auto& [k, v] : h) {
        if (v > best_value || (v == best_value && k < best)) {
            best = k;
            best_value = v;
        }
    }
    return best;
}

}  // namespace detail

/// Inserts a chip at `insert_at` and performs up to `steps` greedy firings; stops early when
/// the chip reaches an absorbing state (which removes it).
template <LazyChain C, class Observer = NoLazyObserver>
LazyTrace lazy_run(const C& chain, SparseHunger h0, std::size_t insert_at, std::uint64_t steps,
                   Observer&& observe = {}) {
    LazyTrace out;
    out.final_h = std::move(h0);
    auto& h = out.final_h;
    std::vector<std::size_t> touched;

    auto add_row = [&](std::size_t from) {
        for (const auto& [to, p] : chain.row(from)) {
            h[to] += p;
            touched.push_back(to);
        }
    };

    add_row(insert_at);
    observe(StepEvent{0, StepKind::insert, insert_at}, std::as_const(h), std::span<const std::size_t>(touched));

    for (std::uint64_t s = 1; s <= steps; ++s) {
        touched.clear();
        const std::size_t j = detail::sparse_hungriest(h);
        out.fired.push_back(j);
        out.steps = s;
        if (chain.is_absorbing(j)) {
            h[j] -= 1;
            touched.push_back(j);
            out.absorbed = true;
            observe(StepEvent{s, StepKind::absorb, j}, std::as_const(h), std::span<const std::size_t>(touched));
            break;
        }
        h[j] -= 1;
        touched.push_back(j);
        add_row(j);
        observe(StepEvent{s, StepKind::fire, j}, std::as_const(h), std::span<const std::size_t>(touched));
    }
    return out;
}

}  // namespace hungerlab
