#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hungerlab/errors.hpp"
#include "hungerlab/graph.hpp"
#include "hungerlab/linear_solve.hpp"
#include "hungerlab/matrix.hpp"
#include "hungerlab/scalar.hpp"

namespace hungerlab {

/// Row-sum tolerance for float chains; rows inside it are renormalized at load.
inline constexpr double float_row_tolerance = 1e-12;

/// Finite row-stochastic chain over one scalar mode. Immutable once built.
template <Scalar T>
class MarkovChain {
public:
    using scalar_type = T;
    static constexpr Mode mode = ScalarTraits<T>::mode;

    explicit MarkovChain(Matrix<T> transitions, std::vector<std::string> labels = {})
        : p_(std::move(transitions)), labels_(std::move(labels)) {
        const std::size_t n = p_.rows();
        if (n == 0) throw Error(Errc::invalid_argument, "chain needs at least one state");
        if (p_.cols() != n) throw Error(Errc::invalid_argument, "transition matrix is not square");
        if (labels_.empty()) {
            for (std::size_t i = 0; i < n; ++i) labels_.push_back("v" + std::to_string(i + 1));
        }
        if (labels_.size() != n) throw Error(Errc::invalid_argument, "label count does not match state count");
        if (std::set<std::string>(labels_.begin(), labels_.end()).size() != n)
            throw Error(Errc::invalid_argument, "state labels must be unique");
        validate_rows();

        successors_.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (p_(i, j) > 0) successors_[i].push_back(j);
    }

    std::size_t size() const noexcept { return p_.rows(); }
    const Matrix<T>& transitions() const noexcept { return p_; }
    const T& prob(std::size_t i, std::size_t j) const { return p_(i, j); }
    std::span<const T> row(std::size_t i) const { return p_.row(i); }

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }

    /// Targets with positive probability, ascending.
    const std::vector<std::size_t>& successors(std::size_t i) const { return successors_[i]; }
    const Adjacency& adjacency() const noexcept { return successors_; }

    bool is_absorbing(std::size_t i) const { return p_(i, i) == 1; }

    /// Resolves a label, or failing that a 1-based index.
    std::size_t state_index(std::string_view ref) const {
        for (std::size_t i = 0; i < labels_.size(); ++i)
            if (labels_[i] == ref) return i;
        std::size_t k = 0;
        auto [end, ec] = std::from_chars(ref.data(), ref.data() + ref.size(), k);
        if (ec == std::errc{} && end == ref.data() + ref.size() && k >= 1 && k <= size()) return k - 1;
        throw Error(Errc::invalid_argument, "unknown state '" + std::string(ref) + "'");
    }

    friend bool operator==(const MarkovChain& a, const MarkovChain& b) {
        return a.p_ == b.p_ && a.labels_ == b.labels_;
    }

private:
    void validate_rows() {
        const std::size_t n = p_.rows();
        for (std::size_t i = 0; i < n; ++i) {
            T sum(0);
            for (std::size_t j = 0; j < n; ++j) {
                const T& x = p_(i, j);
                if constexpr (!ScalarTraits<T>::exact) {
                    if (!std::isfinite(x)) throw Error(Errc::malformed_token, "non-finite entry in row " + std::to_string(i + 1));
                }
                if (x < 0) throw Error(Errc::negative_entry, "negative entry in row " + std::to_string(i + 1));
                sum += x;
            }
            if constexpr (ScalarTraits<T>::exact) {
                if (sum != 1) throw Error(Errc::row_sum, "row " + std::to_string(i + 1) + " sums to " + format(sum));
            } else {
                if (std::fabs(sum - 1.0) > float_row_tolerance)
                    throw Error(Errc::row_sum, "row " + std::to_string(i + 1) + " sums to " + format(sum));
                for (std::size_t j = 0; j < n; ++j) p_(i, j) /= sum;
            }
        }
    }

    Matrix<T> p_;
    std::vector<std::string> labels_;
    Adjacency successors_;
};

template <Scalar T>
struct HungerMatrix {
    Matrix<T> h;  // P - I
};

/// Chain with absorbing rows sent to `origin` and states unreachable from it dropped.
template <Scalar T>
struct ReroutedChain {
    MarkovChain<T> chain;
    std::size_t origin;
    std::vector<std::size_t> kept;               // new index -> original index
    std::vector<std::size_t> absorbing_images;   // new indices of original absorbing states
};

template <Scalar T>
struct SplitChain {
    MarkovChain<T> chain;
    std::size_t v0;  // carries the out-edges of v
    std::size_t v1;  // receives the in-edges of v; absorbing
};

template <Scalar T>
std::vector<std::size_t> absorbing_states(const MarkovChain<T>& chain) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < chain.size(); ++i)
        if (chain.is_absorbing(i)) out.push_back(i);
    return out;
}

template <Scalar T>
bool is_irreducible(const MarkovChain<T>& chain) {
    return strongly_connected_components(chain.adjacency()).count == 1;
}

template <Scalar T>
HungerMatrix<T> hunger_matrix(const MarkovChain<T>& chain) {
    Matrix<T> h = chain.transitions();
    for (std::size_t i = 0; i < chain.size(); ++i) h(i, i) -= 1;
    return {std::move(h)};
}

/// The unique stationary distribution, from the left nullspace of H.
template <Scalar T>
std::vector<T> stationary_distribution(const MarkovChain<T>& chain) {
    auto basis = nullspace(hunger_matrix(chain).h.transposed());
    if (basis.size() != 1)
        throw Error(Errc::non_unique_stationary,
                    "stationary space has dimension " + std::to_string(basis.size()));
    std::vector<T> pi = std::move(basis.front());
    T total(0);
    for (const auto& x : pi) total += x;
    for (auto& x : pi) x /= total;
    if constexpr (!ScalarTraits<T>::exact) {
        double renorm = 0.0;
        for (auto& x : pi) {
            x = std::max(x, 0.0);
            renorm += x;
        }
        for (auto& x : pi) x /= renorm;
    }
    return pi;
}

/// Least common denominator of the stationary probabilities (rational chains only).
template <Scalar T>
Integer lcd_of_stationary(const MarkovChain<T>& chain) {
    if constexpr (!ScalarTraits<T>::exact) {
        throw Error(Errc::float_mode_unsupported, "lcd needs exact rational probabilities");
    } else {
        const auto pi = stationary_distribution(chain);
        return lcd(pi);
    }
}

template <Scalar T>
MarkovChain<T> make_absorbing(const MarkovChain<T>& chain, std::size_t u) {
    Matrix<T> p = chain.transitions();
    for (std::size_t j = 0; j < chain.size(); ++j) p(u, j) = T(j == u ? 1 : 0);
    return MarkovChain<T>(std::move(p), chain.labels());
}

template <Scalar T>
ReroutedChain<T> reroute(const MarkovChain<T>& chain, std::size_t v) {
    const auto absorbing = absorbing_states(chain);
    if (absorbing.empty()) throw Error(Errc::no_absorbing_states, "reroute needs an absorbing chain");
    if (chain.is_absorbing(v)) throw Error(Errc::v_is_absorbing, "cannot reroute at absorbing " + chain.label(v));

    const std::size_t n = chain.size();
    Matrix<T> modified = chain.transitions();
    for (std::size_t u : absorbing)
        for (std::size_t j = 0; j < n; ++j) modified(u, j) = T(j == v ? 1 : 0);

    Adjacency adj(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (modified(i, j) > 0) adj[i].push_back(j);
    const auto reach = reachable_from(adj, v);

    std::vector<std::size_t> kept;
    std::vector<std::size_t> image(n, n);
    for (std::size_t i = 0; i < n; ++i)
        if (reach[i]) {
            image[i] = kept.size();
            kept.push_back(i);
        }

    Matrix<T> p(kept.size(), kept.size());
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < kept.size(); ++a) {
        labels.push_back(chain.label(kept[a]));
        for (std::size_t b = 0; b < kept.size(); ++b) p(a, b) = modified(kept[a], kept[b]);
    }
    std::vector<std::size_t> images;
    for (std::size_t u : absorbing)
        if (reach[u]) images.push_back(image[u]);

    ReroutedChain<T> out{MarkovChain<T>(std::move(p), std::move(labels)), image[v], std::move(kept),
                         std::move(images)};
    if (!is_irreducible(out.chain))
        throw Error(Errc::invariant_violated, "rerouted chain is not irreducible; input chain is not absorbing");
    return out;
}

/// Splits v into v0 (same index, keeps out-edges) and v1 (appended, takes in-edges, absorbing).
template <Scalar T>
SplitChain<T> split_vertex(const MarkovChain<T>& chain, std::size_t v) {
    const std::size_t n = chain.size();
    Matrix<T> p(n + 1, n + 1, T(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) p(i, j == v ? n : j) += chain.prob(i, j);
    p(n, n) = T(1);

    std::vector<std::string> labels = chain.labels();
    labels[v] = chain.label(v) + "_0";
    labels.push_back(chain.label(v) + "_1");
    return {MarkovChain<T>(std::move(p), std::move(labels)), v, n};
}

}  // namespace hungerlab
