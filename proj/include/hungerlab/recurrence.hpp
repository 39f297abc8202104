#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "hungerlab/chain.hpp"
#include "hungerlab/engine.hpp"
#include "hungerlab/linear_solve.hpp"
#include "hungerlab/rational.hpp"

namespace hungerlab {

inline constexpr std::size_t default_orbit_memory = 10'000'000;

/// Periodic tail of a hunger-game orbit.
struct CycleInfo {
    std::uint64_t entry_steps = 0;          // steps before the first repeated vector
    std::uint64_t period = 0;
    HungerVector<Rational> representative;  // first recurrent vector reached
    std::vector<std::size_t> order;         // firing sequence over one period
    std::string order_class;                // least rotation of `order`
    std::vector<std::uint64_t> cycle_visits;
};

/// Lexicographically least rotation of a firing sequence. States print 1-based: as digits
/// when the chain has at most 9 states, otherwise '-'-delimited.
inline std::string canonical_order(std::span<const std::size_t> order, std::size_t state_count) {
    const std::size_t len = order.size();
    std::size_t i = 0, j = 1, k = 0;
    while (i < len && j < len && k < len) {
        const std::size_t a = order[(i + k) % len];
        const std::size_t b = order[(j + k) % len];
        if (a == b) {
            ++k;
            continue;
        }
        if (a > b)
            i += k + 1;
        else
            j += k + 1;
        if (i == j) ++j;
        k = 0;
    }
    const std::size_t start = len == 0 ? 0 : std::min(i, j);

    std::string out;
    for (std::size_t t = 0; t < len; ++t) {
        const std::size_t s = order[(start + t) % len] + 1;
        if (state_count <= 9) {
            out += static_cast<char>('0' + s);
        } else {
            if (t) out += '-';
            out += std::to_string(s);
        }
    }
    return out;
}

namespace detail {

template <Scalar T>
void require_rational() {
    if constexpr (!ScalarTraits<T>::exact) throw Error(Errc::float_mode_unsupported, "recurrence analysis needs rational mode");
}

inline void require_no_absorbing(const MarkovChain<Rational>& chain) {
    if (!absorbing_states(chain).empty())
        throw Error(Errc::has_absorbing, "recurrence analysis needs a chain without absorbing states");
}

}  // namespace detail

/// Iterates fire_step from h0, storing every exact vector, until one repeats.
template <Scalar T>
CycleInfo find_cycle(const MarkovChain<T>& chain, const HungerVector<T>& h0, std::uint64_t cap = default_cap,
                     std::size_t memory_cap = default_orbit_memory) {
    if constexpr (!ScalarTraits<T>::exact) {
        throw Error(Errc::float_mode_unsupported, "recurrence analysis needs rational mode");
    } else {
        detail::require_no_absorbing(chain);
        check_hunger_size(chain, h0);

        std::unordered_map<HungerVector<Rational>, std::uint64_t, RationalVectorHash> seen;
        std::vector<std::size_t> fired;
        HungerVector<Rational> h = h0;
        for (std::uint64_t step = 0;; ++step) {
            auto [it, inserted] = seen.try_emplace(h, step);
            if (!inserted) {
                CycleInfo info;
                info.entry_steps = it->second;
                info.period = step - it->second;
                info.representative = std::move(h);
                info.order.assign(fired.begin() + static_cast<std::ptrdiff_t>(info.entry_steps), fired.end());
                info.order_class = canonical_order(info.order, chain.size());
                info.cycle_visits.assign(chain.size(), 0);
                for (std::size_t s : info.order) ++info.cycle_visits[s];
                return info;
            }
            if (step >= cap) throw_cap_exceeded(cap);
            if (seen.size() >= memory_cap)
                throw Error(Errc::orbit_memory_exceeded, "stored " + std::to_string(seen.size()) + " hunger vectors");
            const std::size_t i = hungriest_index(h);
            add_hunger_row(chain, h, i);
            fired.push_back(i);
        }
    }
}

/// True iff iterating from h returns exactly to h.
template <Scalar T>
bool is_recurrent(const MarkovChain<T>& chain, const HungerVector<T>& h, std::uint64_t cap = default_cap) {
    return find_cycle(chain, h, cap).entry_steps == 0;
}

/// Period of the orbit of 0; checked against the lcd of the stationary probabilities.
template <Scalar T>
std::uint64_t zero_period(const MarkovChain<T>& chain, std::uint64_t cap = default_cap) {
    detail::require_rational<T>();
    if (!is_irreducible(chain)) throw Error(Errc::not_irreducible, "zero_period needs an irreducible chain");
    const auto info = find_cycle(chain, HungerVector<T>(chain.size(), T(0)), cap);
    const Integer expected = lcd_of_stationary(chain);
    if (info.entry_steps != 0 || Integer(std::to_string(info.period)) != expected)
        throw Error(Errc::invariant_violated, "orbit of 0 has entry " + std::to_string(info.entry_steps) + " and period " +
                                                  std::to_string(info.period) + ", lcd is " + expected.get_str());
    return info.period;
}

/// Translation lattice spanned by H_1 - H_2, ..., H_{n-1} - H_n, plus the primitive stationary vector.
struct HungerLattice {
    std::vector<HungerVector<Rational>> basis;
    std::vector<Integer> p_vec;  // lcd * pi
    Integer lcd;
};

template <Scalar T>
HungerLattice lattice_basis(const MarkovChain<T>& chain) {
    detail::require_rational<T>();
    HungerLattice lat;
    if constexpr (ScalarTraits<T>::exact) {
        const auto h = hunger_matrix(chain).h;
        const std::size_t n = chain.size();
        for (std::size_t i = 0; i + 1 < n; ++i) {
            HungerVector<Rational> b(n);
            for (std::size_t j = 0; j < n; ++j) b[j] = h(i, j) - h(i + 1, j);
            lat.basis.push_back(std::move(b));
        }
        const auto pi = stationary_distribution(chain);
        lat.lcd = lcd(pi);
        for (const auto& x : pi) {
            Rational scaled = x * lat.lcd;
            lat.p_vec.push_back(scaled.get_num());
        }
    }
    return lat;
}

template <Scalar T>
void require_on_hyperplane(const HungerVector<T>& y) {
    T total(0);
    for (const auto& x : y) total += x;
    if (total != 0) throw Error(Errc::y_not_on_z, "entries sum to " + format(total));
}

/// Decides whether y = wH for an integer w with w . 1 = 0.
template <Scalar T>
bool lattice_member(const MarkovChain<T>& chain, const HungerVector<T>& y) {
    detail::require_rational<T>();
    check_hunger_size(chain, y);
    require_on_hyperplane(y);
    if constexpr (ScalarTraits<T>::exact) {
        const auto lat = lattice_basis(chain);
        // w0 H = y  <=>  H^T w0 = y; solutions are w0 + t p_vec.
        const auto sol = solve_linear(hunger_matrix(chain).h.transposed(), y);
        if (!sol) return false;
        Rational total(0);
        for (const auto& w : sol->x) total += w;
        const Rational t = -total / lat.lcd;
        for (std::size_t i = 0; i < y.size(); ++i) {
            const Rational w = sol->x[i] + t * lat.p_vec[i];
            if (!is_integer(w)) return false;
        }
        return true;
    }
    return false;
}

struct CoveringResult {
    bool covered = false;
    std::uint64_t steps = 0;           // multiple of lcd at which x was taken
    HungerVector<Rational> recurrent;  // x, on the cycle reached from h
    HungerVector<Rational> translate;  // u = h - x
};

/// Executable covering statement: run h to a recurrent x after t steps, t the first multiple
/// of the lcd at or past cycle entry, then check h - x lies in the lattice.
template <Scalar T>
CoveringResult covering_check(const MarkovChain<T>& chain, const HungerVector<T>& h, std::uint64_t cap = default_cap) {
    detail::require_rational<T>();
    CoveringResult out;
    if constexpr (ScalarTraits<T>::exact) {
        require_on_hyperplane(h);
        const auto cycle = find_cycle(chain, h, cap);
        const Integer p = lcd_of_stationary(chain);
        if (!p.fits_ulong_p()) throw Error(Errc::invalid_argument, "stationary lcd too large");
        const std::uint64_t period = p.get_ui();
        out.steps = (cycle.entry_steps + period - 1) / period * period;
        out.recurrent = run(chain, h, out.steps).final_h;
        out.translate.resize(h.size());
        for (std::size_t i = 0; i < h.size(); ++i) out.translate[i] = h[i] - out.recurrent[i];
        out.covered = lattice_member(chain, out.translate);
    }
    return out;
}

/// Grid of exact rational points (h1, h2, -h1-h2).
struct GridSpec {
    Rational h1_lo, h1_hi, h2_lo, h2_hi, step;

    static GridSpec square(const Rational& lo, const Rational& hi, const Rational& step) {
        return {lo, hi, lo, hi, step};
    }

    std::vector<Rational> axis(const Rational& lo, const Rational& hi) const {
        if (step <= 0) throw Error(Errc::invalid_argument, "grid step must be positive");
        std::vector<Rational> out;
        for (Rational x = lo; x <= hi; x += step) out.push_back(x);
        return out;
    }
};

struct BasinCell {
    Rational h1, h2;
    bool recurrent = false;
    std::uint64_t period = 0;
    std::optional<std::size_t> order_class;  // set for recurrent cells
    std::uint64_t entry_steps = 0;
    bool cap_exceeded = false;
};

struct BasinMap {
    GridSpec grid;
    std::vector<BasinCell> cells;     // h1 outer, h2 inner
    std::vector<std::string> classes; // order_class id -> canonical order
};

/// Classifies every grid point of the zero-total-hunger plane of a 3-state chain.
template <Scalar T>
BasinMap basin_scan(const MarkovChain<T>& chain, const GridSpec& grid, std::uint64_t cap = default_cap) {
    detail::require_rational<T>();
    if (chain.size() != 3) throw Error(Errc::invalid_argument, "basin scan needs a 3-state chain");
    BasinMap map{grid, {}, {}};
    if constexpr (ScalarTraits<T>::exact) {
        detail::require_no_absorbing(chain);
        std::map<std::string, std::size_t> ids;
        for (const auto& h1 : grid.axis(grid.h1_lo, grid.h1_hi)) {
            for (const auto& h2 : grid.axis(grid.h2_lo, grid.h2_hi)) {
                BasinCell cell;
                cell.h1 = h1;
                cell.h2 = h2;
                try {
                    const auto info = find_cycle(chain, HungerVector<Rational>{h1, h2, Rational(-h1 - h2)}, cap);
                    cell.recurrent = info.entry_steps == 0;
                    cell.period = info.period;
                    cell.entry_steps = info.entry_steps;
                    if (cell.recurrent) {
                        auto [it, fresh] = ids.try_emplace(info.order_class, map.classes.size());
                        if (fresh) map.classes.push_back(info.order_class);
                        cell.order_class = it->second;
                    }
                } catch (const Error& e) {
                    if (e.code() != Errc::cap_exceeded && e.code() != Errc::orbit_memory_exceeded) throw;
                    cell.cap_exceeded = true;
                }
                map.cells.push_back(std::move(cell));
            }
        }
    }
    return map;
}

// ---- empirical checkers for the open period and tiling questions; they report, never assert ----

struct PeriodSample {
    HungerVector<Rational> h;
    bool recurrent = false;
    std::uint64_t period = 0;
    bool cap_exceeded = false;
    bool counterexample = false;  // reached cycle's period differs from the lcd
};

struct PeriodReport {
    Integer lcd;
    std::vector<PeriodSample> samples;
    std::size_t recurrent = 0;
    std::size_t counterexamples = 0;
    std::size_t cap_failures = 0;
};

struct OverlapFlag {
    HungerVector<Rational> point;  // recurrent x
    int a = 0, b = 0;              // translate a (H1-H2) + b (H2-H3)
};

struct TilingReport {
    std::size_t recurrent_points = 0;
    std::size_t translates_checked = 0;
    std::vector<OverlapFlag> overlaps;
};

struct ConjectureReport {
    PeriodReport period;
    std::optional<TilingReport> tiling;
};

inline constexpr std::uint64_t default_sample_seed = 7;

/// Random exact points on the zero-sum hyperplane: the first n-1 coordinates uniform over
/// [lo, hi] with denominators uniform in [1, 60]; the last closes the sum.
inline std::vector<HungerVector<Rational>> random_hyperplane_samples(std::size_t n, std::size_t count, const Rational& lo,
                                                                     const Rational& hi,
                                                                     std::uint64_t seed = default_sample_seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> den_dist(1, 60);
    std::vector<HungerVector<Rational>> out;
    out.reserve(count);
    for (std::size_t s = 0; s < count; ++s) {
        HungerVector<Rational> h(n);
        Rational total(0);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const long d = den_dist(rng);
            Rational scaled_lo = lo * d, scaled_hi = hi * d;
            Integer num_lo = scaled_lo.get_num(), num_hi = scaled_hi.get_num();
            mpz_cdiv_q(num_lo.get_mpz_t(), scaled_lo.get_num_mpz_t(), scaled_lo.get_den_mpz_t());
            mpz_fdiv_q(num_hi.get_mpz_t(), scaled_hi.get_num_mpz_t(), scaled_hi.get_den_mpz_t());
            std::uniform_int_distribution<long> num_dist(num_lo.get_si(), num_hi.get_si());
            h[i] = Rational(num_dist(rng), d);
            h[i].canonicalize();
            total += h[i];
        }
        if (n > 0) h[n - 1] = -total;
        out.push_back(std::move(h));
    }
    return out;
}

template <Scalar T>
PeriodReport period_uniformity(const MarkovChain<T>& chain, const std::vector<HungerVector<Rational>>& samples,
                               std::uint64_t cap = default_cap) {
    detail::require_rational<T>();
    PeriodReport report;
    if constexpr (ScalarTraits<T>::exact) {
        report.lcd = lcd_of_stationary(chain);
        for (const auto& h : samples) {
            PeriodSample s{h};
            try {
                const auto info = find_cycle(chain, h, cap);
                s.recurrent = info.entry_steps == 0;
                s.period = info.period;
                s.counterexample = Integer(std::to_string(info.period)) != report.lcd;
            } catch (const Error& e) {
                if (e.code() != Errc::cap_exceeded && e.code() != Errc::orbit_memory_exceeded) throw;
                s.cap_exceeded = true;
            }
            report.recurrent += s.recurrent;
            report.counterexamples += s.counterexample;
            report.cap_failures += s.cap_exceeded;
            report.samples.push_back(std::move(s));
        }
    }
    return report;
}

/// For each recurrent grid point x, flags translates x - u (u a small nonzero lattice vector)
/// that are also recurrent, which would mean translated basins overlap.
template <Scalar T>
TilingReport tiling_check(const MarkovChain<T>& chain, const BasinMap& basin, std::uint64_t cap = default_cap) {
    detail::require_rational<T>();
    if (chain.size() != 3) throw Error(Errc::invalid_argument, "tiling check needs a 3-state chain");
    TilingReport report;
    if constexpr (ScalarTraits<T>::exact) {
        const auto lat = lattice_basis(chain);
        std::unordered_map<HungerVector<Rational>, bool, RationalVectorHash> cache;
        auto recurrent = [&](const HungerVector<Rational>& h) {
            if (auto it = cache.find(h); it != cache.end()) return it->second;
            bool r = false;
            try {
                r = is_recurrent(chain, h, cap);
            } catch (const Error& e) {
                if (e.code() != Errc::cap_exceeded && e.code() != Errc::orbit_memory_exceeded) throw;
            }
            cache.emplace(h, r);
            return r;
        };

        for (const auto& cell : basin.cells) {
            if (!cell.recurrent) continue;
            ++report.recurrent_points;
            const HungerVector<Rational> x{cell.h1, cell.h2, Rational(-cell.h1 - cell.h2)};
            for (int a = -2; a <= 2; ++a) {
                for (int b = -2; b <= 2; ++b) {
                    if (a == 0 && b == 0) continue;
                    HungerVector<Rational> y(3);
                    for (std::size_t j = 0; j < 3; ++j) y[j] = x[j] - a * lat.basis[0][j] - b * lat.basis[1][j];
                    ++report.translates_checked;
                    if (recurrent(y)) report.overlaps.push_back({x, a, b});
                }
            }
        }
    }
    return report;
}

template <Scalar T>
ConjectureReport conjecture_reports(const MarkovChain<T>& chain, const std::vector<HungerVector<Rational>>& samples,
                                    const std::optional<GridSpec>& grid, std::uint64_t cap = default_cap) {
    detail::require_rational<T>();
    if (!is_irreducible(chain)) throw Error(Errc::not_irreducible, "conjecture checks need an irreducible chain");
    ConjectureReport report;
    report.period = period_uniformity(chain, samples, cap);
    if (grid && chain.size() == 3) report.tiling = tiling_check(chain, basin_scan(chain, *grid, cap), cap);
    return report;
}

}  // namespace hungerlab
