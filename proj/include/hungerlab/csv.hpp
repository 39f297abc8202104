#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "hungerlab/baselines.hpp"
#include "hungerlab/engine.hpp"
#include "hungerlab/estimators.hpp"
#include "hungerlab/lazy.hpp"
#include "hungerlab/recurrence.hpp"

namespace hungerlab::csv {

template <class Range>
std::string join(const Range& values, char sep) {
    std::string out;
    bool first = true;
    for (const auto& v : values) {
        if (!first) out += sep;
        first = false;
        out += format(v);
    }
    return out;
}

inline void trace_header(std::ostream& os, std::size_t n) {
    os << "step,fired";
    for (std::size_t i = 1; i <= n; ++i) os << ",h_" << i;
    os << '\n';
}

/// One trace row; `fired` is empty for the initial state.
template <Scalar T>
void trace_row(std::ostream& os, std::uint64_t step, const std::string& fired, const HungerVector<T>& h) {
    os << step << ',' << fired;
    for (const auto& x : h) os << ',' << format(x);
    os << '\n';
}

/// Observer writing one trace row per event of an engine run.
template <Scalar T>
struct TraceWriter {
    std::ostream& os;
    const MarkovChain<T>& chain;

    void operator()(const StepEvent& ev, const HungerVector<T>& h) const { trace_row(os, ev.step, chain.label(ev.state), h); }
};

inline void sparse_header(std::ostream& os) { os << "step,fired_label,touched_state:hunger;...\n"; }

template <LazyChain C>
struct SparseTraceWriter {
    std::ostream& os;
    const C& chain;

    void operator()(const StepEvent& ev, const SparseHunger& h, std::span<const std::size_t> touched) const {
        os << ev.step << ',' << chain.label(ev.state) << ',';
        std::vector<std::size_t> seen;
        bool first = true;
        for (std::size_t s : touched) {
            if (std::find(seen.begin(), seen.end(), s) != seen.end()) continue;
            seen.push_back(s);
            if (!first) os << ';';
            first = false;
            os << chain.label(s) << ':' << to_string(h.at(s));
        }
        os << '\n';
    }
};

inline void profile_header(std::ostream& os) { os << "N,estimate,exact,deviation,N_times_deviation\n"; }

template <Scalar T>
void profile_rows(std::ostream& os, const std::vector<ProfileRow<T>>& rows) {
    for (const auto& r : rows)
        os << r.n << ',' << format(r.estimate) << ',' << format(r.exact) << ',' << format(r.deviation) << ','
           << format(r.scaled) << '\n';
}

inline void basin_rows(std::ostream& os, const BasinMap& map) {
    os << "h1,h2,recurrent,period,order_class,entry_steps\n";
    for (const auto& c : map.cells) {
        os << to_string(c.h1) << ',' << to_string(c.h2) << ',';
        if (c.cap_exceeded) {
            os << "cap,,,\n";
            continue;
        }
        os << (c.recurrent ? "true" : "false") << ',' << c.period << ',';
        if (c.order_class) os << *c.order_class;
        os << ',' << c.entry_steps << '\n';
    }
}

inline void basin_classes(std::ostream& os, const BasinMap& map) {
    os << "order_class,canonical_order\n";
    for (std::size_t i = 0; i < map.classes.size(); ++i) os << i << ',' << map.classes[i] << '\n';
}

inline void compare_rows(std::ostream& os, const TwoStateComparison& cmp) {
    os << "N,hunger_dev,rotor_dev\n";
    for (const auto& r : cmp.rows) os << r.n << ',' << to_string(r.hunger_dev) << ',' << to_string(r.rotor_dev) << '\n';
}

}  // namespace hungerlab::csv
