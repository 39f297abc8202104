#pragma once

// Fixtures, random chain generators and independent oracles shared by the test binaries.
// The oracles deliberately avoid the library's solver and chain transforms.

#include <cstddef>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "hungerlab/hungerlab.hpp"

namespace hltest {

using hungerlab::Integer;
using hungerlab::MarkovChain;
using hungerlab::Matrix;
using hungerlab::Rational;
using Vec = std::vector<Rational>;
using Grid = std::vector<Vec>;

inline Rational q(const char* s) { return hungerlab::parse_exact(s); }

inline Rational ratio(std::uint64_t a, std::uint64_t b) {
    Rational r(static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    r.canonicalize();
    return r;
}

inline Vec vec(std::initializer_list<const char*> xs) {
    Vec out;
    for (const char* x : xs) out.push_back(q(x));
    return out;
}

inline MarkovChain<Rational> chain(std::initializer_list<std::initializer_list<const char*>> rows) {
    const std::size_t n = rows.size();
    Matrix<Rational> p(n, n);
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (const char* x : row) p(i, j++) = q(x);
        ++i;
    }
    return MarkovChain<Rational>(std::move(p));
}

inline MarkovChain<Rational> from_grid(const Grid& rows) {
    Matrix<Rational> p(rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) p(i, j) = rows[i][j];
    return MarkovChain<Rational>(std::move(p));
}

inline MarkovChain<double> to_double(const MarkovChain<Rational>& c) {
    Matrix<double> p(c.size(), c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j) p(i, j) = c.prob(i, j).get_d();
    return MarkovChain<double>(std::move(p), c.labels());
}

// ---- fixtures ----

inline MarkovChain<Rational> doubly_reflecting() {
    return chain({{"1/2", "1/2", "0"}, {"1/2", "0", "1/2"}, {"0", "1/2", "1/2"}});
}

/// Five states, v1 and v5 absorbing.
inline MarkovChain<Rational> five_state_absorbing() {
    return chain({{"1", "0", "0", "0", "0"},
                  {"1/5", "3/5", "1/5", "0", "0"},
                  {"0", "3/5", "0", "2/5", "0"},
                  {"0", "0", "1/5", "0", "4/5"},
                  {"0", "0", "0", "0", "1"}});
}

/// Five states, v1 and v4 absorbing; v5 is not reachable from v2.
inline MarkovChain<Rational> reroute_example() {
    return chain({{"1", "0", "0", "0", "0"},
                  {"1/2", "0", "1/2", "0", "0"},
                  {"0", "1/2", "0", "1/2", "0"},
                  {"0", "0", "0", "1", "0"},
                  {"0", "0", "0", "1/2", "1/2"}});
}

inline MarkovChain<Rational> three_state_period18() {
    return chain({{"4/5", "1/5", "0"}, {"1/5", "2/5", "2/5"}, {"3/5", "2/5", "0"}});
}

inline MarkovChain<Rational> two_state(const Rational& p) {
    return from_grid({{Rational(1 - p), p}, {p, Rational(1 - p)}});
}

// ---- independent oracles ----

/// Plain Gauss-Jordan over the rationals. Returns false if the system is singular.
inline bool gauss_solve(Grid a, Vec b, Vec& x) {
    const std::size_t n = a.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return false;
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            const Rational f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
            b[r] -= f * b[c];
        }
    }
    x.assign(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return true;
}

/// pi (P - I) = 0 with one balance equation swapped for sum(pi) = 1.
inline Vec oracle_stationary(const MarkovChain<Rational>& c) {
    const std::size_t n = c.size();
    Grid a(n, Vec(n));
    Vec b(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = c.prob(j, i) - (i == j ? 1 : 0);
    for (std::size_t j = 0; j < n; ++j) a[n - 1][j] = 1;
    b[n - 1] = 1;
    Vec x;
    gauss_solve(a, b, x);
    return x;
}

inline bool is_absorbing_row(const MarkovChain<Rational>& c, std::size_t i) { return c.prob(i, i) == 1; }

/// Absorption probabilities into `target` from every state: x = P x on transient states.
inline Vec oracle_absorption_into(const MarkovChain<Rational>& c, std::size_t target) {
    const std::size_t n = c.size();
    Grid a(n, Vec(n, Rational(0)));
    Vec b(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        a[i][i] = 1;
        if (is_absorbing_row(c, i)) {
            b[i] = i == target ? 1 : 0;
            continue;
        }
        for (std::size_t j = 0; j < n; ++j) a[i][j] -= c.prob(i, j);
    }
    Vec x;
    gauss_solve(a, b, x);
    return x;
}

/// Expected steps to absorption from every state: t = 1 + P t on transient states.
inline Vec oracle_absorption_time(const MarkovChain<Rational>& c) {
    const std::size_t n = c.size();
    Grid a(n, Vec(n, Rational(0)));
    Vec b(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        a[i][i] = 1;
        if (is_absorbing_row(c, i)) continue;
        b[i] = 1;
        for (std::size_t j = 0; j < n; ++j) a[i][j] -= c.prob(i, j);
    }
    Vec x;
    gauss_solve(a, b, x);
    return x;
}

/// Least common denominator of a vector, by folding lcm over denominators.
inline Integer oracle_lcd(const Vec& xs) {
    Integer l = 1;
    for (const auto& x : xs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    return l;
}

struct MonteCarlo {
    std::vector<double> mean;  // per absorbing target, in state order of the chain's absorbing states
    std::vector<double> stderr_;
};

/// Random walks from v until absorption.
inline MonteCarlo monte_carlo_hitting(const MarkovChain<Rational>& c, std::size_t v, std::size_t walks, std::uint64_t seed) {
    const std::size_t n = c.size();
    std::vector<std::vector<double>> cum(n);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0;
        for (std::size_t j = 0; j < n; ++j) cum[i].push_back(acc += c.prob(i, j).get_d());
    }
    std::vector<std::size_t> absorbing;
    for (std::size_t i = 0; i < n; ++i)
        if (is_absorbing_row(c, i)) absorbing.push_back(i);
    std::vector<std::size_t> hits(n, 0);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (std::size_t w = 0; w < walks; ++w) {
        std::size_t x = v;
        while (!is_absorbing_row(c, x)) {
            const double r = unif(rng) * cum[x].back();
            std::size_t j = 0;
            while (j + 1 < n && cum[x][j] <= r) ++j;
            x = j;
        }
        ++hits[x];
    }
    MonteCarlo out;
    for (std::size_t u : absorbing) {
        const double p = static_cast<double>(hits[u]) / static_cast<double>(walks);
        out.mean.push_back(p);
        out.stderr_.push_back(std::sqrt(p * (1 - p) / static_cast<double>(walks)));
    }
    return out;
}

// ---- random chains ----

inline Vec random_row(std::size_t n, int max_den, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> den(1, max_den);
    std::uniform_int_distribution<std::size_t> col(0, n - 1);
    const int d = den(rng);
    std::vector<int> units(n, 0);
    for (int k = 0; k < d; ++k) ++units[col(rng)];
    Vec row;
    for (int u : units) row.push_back(Rational(u, d));
    for (auto& x : row) x.canonicalize();
    return row;
}

/// Visits every state reachable from `s` through positive transitions.
inline std::vector<bool> oracle_reach(const MarkovChain<Rational>& c, std::size_t s) {
    std::vector<bool> seen(c.size(), false);
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
        const std::size_t x = stack.back();
        stack.pop_back();
        for (std::size_t y = 0; y < c.size(); ++y)
            if (c.prob(x, y) != 0 && !seen[y]) {
                seen[y] = true;
                stack.push_back(y);
            }
    }
    return seen;
}

inline bool oracle_irreducible(const MarkovChain<Rational>& c) {
    for (std::size_t s = 0; s < c.size(); ++s)
        for (bool r : oracle_reach(c, s))
            if (!r) return false;
    return true;
}

inline MarkovChain<Rational> random_irreducible(std::size_t n, int max_den, std::mt19937_64& rng) {
    while (true) {
        Grid rows;
        for (std::size_t i = 0; i < n; ++i) rows.push_back(random_row(n, max_den, rng));
        auto c = from_grid(rows);
        if (oracle_irreducible(c)) return c;
    }
}

/// Absorbing chain whose first `absorbing` states absorb and from which every state can be absorbed.
inline MarkovChain<Rational> random_absorbing(std::size_t n, std::size_t absorbing, int max_den, std::mt19937_64& rng) {
    while (true) {
        Grid rows;
        for (std::size_t i = 0; i < n; ++i) {
            if (i < absorbing) {
                Vec e(n, Rational(0));
                e[i] = 1;
                rows.push_back(std::move(e));
            } else {
                auto row = random_row(n, max_den, rng);
                if (row[i] == 1) break;
                rows.push_back(std::move(row));
            }
        }
        if (rows.size() != n) continue;
        auto c = from_grid(rows);
        bool ok = true;
        for (std::size_t s = absorbing; s < n && ok; ++s) {
            const auto r = oracle_reach(c, s);
            bool hits = false;
            for (std::size_t u = 0; u < absorbing; ++u) hits = hits || r[u];
            ok = hits;
        }
        if (ok) return c;
    }
}

/// Random exact vector with zero sum; entries have denominators up to 12.
inline Vec random_zero_sum(std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> den(1, 12), num(-30, 30);
    Vec h(n);
    Rational total(0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = Rational(num(rng), den(rng));
        h[i].canonicalize();
        total += h[i];
    }
    h[n - 1] = -total;
    return h;
}

}  // namespace hltest
