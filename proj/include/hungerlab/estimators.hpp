#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hungerlab/chain.hpp"
#include "hungerlab/engine.hpp"
#include "hungerlab/linear_solve.hpp"

namespace hungerlab {

/// One row of an estimator sweep: `N,estimate,exact,deviation,N_times_deviation`.
template <Scalar T>
struct ProfileRow {
    std::uint64_t n;
    T estimate;
    T exact;
    T deviation;
    T scaled;  // n * deviation
};

template <Scalar T>
struct DiscrepancyEntry {
    std::uint64_t n;
    T distance;  // L1 distance of v/N from pi
    T scaled;    // n * distance
};

template <Scalar T>
struct DiscrepancyProfile {
    std::vector<DiscrepancyEntry<T>> entries;
    T sup_scaled = T(0);
    std::uint64_t argsup = 0;
};

template <Scalar T>
struct HittingEstimate {
    std::size_t target;  // original state index
    T estimate;          // a_N
    std::uint64_t n;
    T exact;             // h_u(v)
    T deviation;
};

template <Scalar T>
struct AbsorptionEstimate {
    T estimate;  // b_N
    std::uint64_t n;
    T exact;
    T deviation;
};

template <Scalar T>
std::vector<T> normalized_firing_vector(const FiringTrace<T>& trace) {
    if (trace.steps == 0) throw Error(Errc::zero_steps, "normalized firing vector needs N >= 1");
    std::vector<T> out;
    out.reserve(trace.visits.size());
    const T n = ScalarTraits<T>::from_count(trace.steps);
    for (auto v : trace.visits) out.push_back(T(ScalarTraits<T>::from_count(v) / n));
    return out;
}

template <Scalar T>
DiscrepancyProfile<T> discrepancy_profile(const MarkovChain<T>& chain, const HungerVector<T>& h0,
                                          std::uint64_t n_max) {
    const auto pi = stationary_distribution(chain);
    DiscrepancyProfile<T> profile;
    profile.entries.reserve(n_max);
    std::vector<std::uint64_t> visits(chain.size(), 0);

    run(chain, h0, n_max, [&](const StepEvent& ev, const HungerVector<T>&) {
        ++visits[ev.state];
        const T n = ScalarTraits<T>::from_count(ev.step);
        T dist(0);
        for (std::size_t i = 0; i < visits.size(); ++i) dist += abs_value(T(ScalarTraits<T>::from_count(visits[i]) / n - pi[i]));
        T scaled = dist * n;
        if (scaled > profile.sup_scaled) {
            profile.sup_scaled = scaled;
            profile.argsup = ev.step;
        }
        profile.entries.push_back({ev.step, std::move(dist), std::move(scaled)});
    });
    return profile;
}

/// Exact hitting probabilities h_u(v) for every absorbing u (in absorbing_states order),
/// from the first-step equations h(x) = sum_y P_xy h(y) with boundary values on U.
template <Scalar T>
std::vector<T> hitting_probabilities(const MarkovChain<T>& chain, std::size_t v) {
    const auto absorbing = absorbing_states(chain);
    if (absorbing.empty()) throw Error(Errc::no_absorbing_states, "chain has no absorbing states");
    const std::size_t n = chain.size();
    Matrix<T> a(n, n, T(0));
    for (std::size_t x = 0; x < n; ++x) {
        a(x, x) = T(1);
        if (chain.is_absorbing(x)) continue;
        for (std::size_t y : chain.successors(x)) a(x, y) -= chain.prob(x, y);
    }
    std::vector<T> out;
    for (std::size_t u : absorbing) {
        std::vector<T> b(n, T(0));
        b[u] = T(1);
        auto sol = solve_linear(a, b);
        if (!sol || !sol->unique)
            throw Error(Errc::invalid_argument, "hitting system is singular; chain is not absorbing");
        out.push_back(sol->x[v]);
    }
    return out;
}

/// E_v T_U from the rerouted chain's stationary distribution: 1 / sum_{u in U} pi_u - 1.
template <Scalar T>
T expected_absorption_time(const ReroutedChain<T>& rr) {
    const auto pi = stationary_distribution(rr.chain);
    T mass(0);
    for (std::size_t u : rr.absorbing_images) mass += pi[u];
    return T(T(1) / mass - T(1));
}

namespace detail {

/// Runs the rerouted chain from h = 0 and reports (N, visits, total visits to U) after each step.
template <Scalar T, class F>
void sweep_rerouted(const ReroutedChain<T>& rr, std::uint64_t n_max, F&& on_step) {
    std::vector<std::uint64_t> visits(rr.chain.size(), 0);
    std::vector<bool> in_u(rr.chain.size(), false);
    for (std::size_t u : rr.absorbing_images) in_u[u] = true;
    std::uint64_t absorbed = 0;
    const HungerVector<T> zero(rr.chain.size(), T(0));
    run(rr.chain, zero, n_max, [&](const StepEvent& ev, const HungerVector<T>&) {
        ++visits[ev.state];
        if (in_u[ev.state]) ++absorbed;
        on_step(ev.step, std::as_const(visits), absorbed);
    });
}

template <Scalar T>
T ratio_or_zero(std::uint64_t num, std::uint64_t den) {
    if (den == 0) return T(0);
    return T(ScalarTraits<T>::from_count(num) / ScalarTraits<T>::from_count(den));
}

template <Scalar T>
T absorption_estimate(std::uint64_t n, std::uint64_t absorbed) {
    if (absorbed == 0) return T(0);
    return T(ScalarTraits<T>::from_count(n) / ScalarTraits<T>::from_count(absorbed) - T(1));
}

template <Scalar T>
std::size_t kept_image(const ReroutedChain<T>& rr, std::size_t original) {
    for (std::size_t i = 0; i < rr.kept.size(); ++i)
        if (rr.kept[i] == original) return i;
    return rr.kept.size();
}

template <Scalar T>
ProfileRow<T> make_row(std::uint64_t n, T estimate, const T& exact) {
    T dev = abs_value(T(estimate - exact));
    T scaled = dev * ScalarTraits<T>::from_count(n);
    return {n, std::move(estimate), exact, std::move(dev), std::move(scaled)};
}

template <Scalar T>
void require_irreducible(const MarkovChain<T>& chain) {
    if (!is_irreducible(chain)) throw Error(Errc::not_irreducible, "chain must be irreducible");
}

}  // namespace detail

/// a_N = v_u / sum_{u' in U} v_u' on the rerouted chain, for every absorbing u.
template <Scalar T>
std::vector<HittingEstimate<T>> hitting_distribution(const MarkovChain<T>& chain, std::size_t v, std::uint64_t n) {
    const auto rr = reroute(chain, v);
    const auto exact = hitting_probabilities(chain, v);
    const auto absorbing = absorbing_states(chain);

    std::vector<std::uint64_t> visits(rr.chain.size(), 0);
    std::uint64_t absorbed = 0;
    detail::sweep_rerouted(rr, n, [&](std::uint64_t step, const std::vector<std::uint64_t>& vis, std::uint64_t a) {
        if (step == n) {
            visits = vis;
            absorbed = a;
        }
    });

    std::vector<HittingEstimate<T>> out;
    for (std::size_t k = 0; k < absorbing.size(); ++k) {
        const std::size_t img = detail::kept_image(rr, absorbing[k]);
        const std::uint64_t hits = img < rr.kept.size() ? visits[img] : 0;
        T a = detail::ratio_or_zero<T>(hits, absorbed);
        T dev = abs_value(T(a - exact[k]));
        out.push_back({absorbing[k], std::move(a), n, exact[k], std::move(dev)});
    }
    return out;
}

/// a_N for one target u at every N in [1, n_max].
template <Scalar T>
std::vector<ProfileRow<T>> hitting_sweep(const MarkovChain<T>& chain, std::size_t v, std::size_t u,
                                         std::uint64_t n_max) {
    const auto rr = reroute(chain, v);
    const auto absorbing = absorbing_states(chain);
    const auto pos = std::find(absorbing.begin(), absorbing.end(), u);
    if (pos == absorbing.end()) throw Error(Errc::invalid_argument, "target " + chain.label(u) + " is not absorbing");
    const T exact = hitting_probabilities(chain, v)[static_cast<std::size_t>(pos - absorbing.begin())];
    const std::size_t img = detail::kept_image(rr, u);

    std::vector<ProfileRow<T>> rows;
    rows.reserve(n_max);
    detail::sweep_rerouted(rr, n_max, [&](std::uint64_t n, const std::vector<std::uint64_t>& visits, std::uint64_t absorbed) {
        const std::uint64_t hits = img < rr.kept.size() ? visits[img] : 0;
        rows.push_back(detail::make_row(n, detail::ratio_or_zero<T>(hits, absorbed), exact));
    });
    return rows;
}

/// b_N = N / sum_{u in U} v_u - 1 on the rerouted chain.
template <Scalar T>
AbsorptionEstimate<T> absorption_time(const MarkovChain<T>& chain, std::size_t v, std::uint64_t n) {
    const auto rr = reroute(chain, v);
    const T exact = expected_absorption_time(rr);
    std::uint64_t absorbed = 0;
    detail::sweep_rerouted(rr, n, [&](std::uint64_t, const std::vector<std::uint64_t>&, std::uint64_t a) { absorbed = a; });
    T b = detail::absorption_estimate<T>(n, absorbed);
    T dev = abs_value(T(b - exact));
    return {std::move(b), n, exact, std::move(dev)};
}

template <Scalar T>
std::vector<ProfileRow<T>> absorption_sweep(const MarkovChain<T>& chain, std::size_t v, std::uint64_t n_max) {
    const auto rr = reroute(chain, v);
    const T exact = expected_absorption_time(rr);
    std::vector<ProfileRow<T>> rows;
    rows.reserve(n_max);
    detail::sweep_rerouted(rr, n_max, [&](std::uint64_t n, const std::vector<std::uint64_t>&, std::uint64_t absorbed) {
        rows.push_back(detail::make_row(n, detail::absorption_estimate<T>(n, absorbed), exact));
    });
    return rows;
}

/// Split v, make u absorbing: the chain whose hitting probability at u from v0 is the escape probability.
template <Scalar T>
SplitChain<T> escape_chain(const MarkovChain<T>& chain, std::size_t v, std::size_t u) {
    if (u == v) throw Error(Errc::u_equals_v, "escape target equals start state");
    detail::require_irreducible(chain);
    auto split = split_vertex(chain, v);
    split.chain = make_absorbing(split.chain, u);
    return split;
}

/// Probability of reaching u before returning to v.
template <Scalar T>
HittingEstimate<T> escape_probability(const MarkovChain<T>& chain, std::size_t v, std::size_t u, std::uint64_t n) {
    const auto split = escape_chain(chain, v, u);
    for (auto& est : hitting_distribution(split.chain, split.v0, n))
        if (est.target == u) return est;
    throw Error(Errc::invariant_violated, "escape target missing from absorbing set");
}

template <Scalar T>
std::vector<ProfileRow<T>> escape_sweep(const MarkovChain<T>& chain, std::size_t v, std::size_t u, std::uint64_t n_max) {
    const auto split = escape_chain(chain, v, u);
    return hitting_sweep(split.chain, split.v0, u, n_max);
}

/// Expected return time to v: absorption time v0 -> v1 in the split chain. The exact
/// value reported is 1 / pi_v of the original chain.
template <Scalar T>
AbsorptionEstimate<T> expected_return_time(const MarkovChain<T>& chain, std::size_t v, std::uint64_t n) {
    detail::require_irreducible(chain);
    const auto split = split_vertex(chain, v);
    auto est = absorption_time(split.chain, split.v0, n);
    est.exact = T(1) / stationary_distribution(chain)[v];
    est.deviation = abs_value(T(est.estimate - est.exact));
    return est;
}

template <Scalar T>
std::vector<ProfileRow<T>> return_time_sweep(const MarkovChain<T>& chain, std::size_t v, std::uint64_t n_max) {
    detail::require_irreducible(chain);
    const auto split = split_vertex(chain, v);
    const T exact = T(1) / stationary_distribution(chain)[v];
    auto rows = absorption_sweep(split.chain, split.v0, n_max);
    for (auto& r : rows) r = detail::make_row(r.n, r.estimate, exact);
    return rows;
}

/// Boundedness evidence for N * deviation: the maximum over the last tenth of the sweep
/// must not exceed 105% of the maximum over the rest.
inline constexpr unsigned trend_slack_percent = 105;

template <Scalar T>
struct TrendCheck {
    T head_max = T(0);
    T tail_max = T(0);
    bool bounded = false;
};

template <Scalar T>
TrendCheck<T> check_trend(std::span<const T> scaled) {
    TrendCheck<T> out;
    const std::size_t tail_start = scaled.size() - scaled.size() / 10;
    for (std::size_t i = 0; i < scaled.size(); ++i) {
        auto& slot = i < tail_start ? out.head_max : out.tail_max;
        if (scaled[i] > slot) slot = scaled[i];
    }
    out.bounded = out.tail_max * ScalarTraits<T>::from_count(100) <=
                  out.head_max * ScalarTraits<T>::from_count(trend_slack_percent);
    return out;
}

template <Scalar T>
TrendCheck<T> check_trend(const std::vector<ProfileRow<T>>& rows) {
    std::vector<T> scaled;
    scaled.reserve(rows.size());
    for (const auto& r : rows) scaled.push_back(r.scaled);
    return check_trend(std::span<const T>(scaled));
}

template <Scalar T>
TrendCheck<T> check_trend(const DiscrepancyProfile<T>& profile) {
    std::vector<T> scaled;
    scaled.reserve(profile.entries.size());
    for (const auto& e : profile.entries) scaled.push_back(e.scaled);
    return check_trend(std::span<const T>(scaled));
}

}  // namespace hungerlab
