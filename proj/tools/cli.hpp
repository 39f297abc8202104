#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "hungerlab/hungerlab.hpp"

namespace hungerlab::cli {

enum Exit : int { ok = 0, usage = 2, nonterminating = 3, unsupported_mode = 4 };

struct Options {
    std::string chain;
    std::string mode;
    std::string output;
    std::string classes;
    std::string at, from, to;
    std::string h0;
    std::string c0, d;
    std::string rotor;
    std::string q = "1/10";
    std::string lazy;
    std::vector<std::string> bounds;
    std::string step = "1/20";
    std::uint64_t steps = 1000;
    std::uint64_t cap = default_cap;
    std::uint64_t samples = 20;
    std::uint64_t seed = default_sample_seed;
};

inline std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        out.emplace_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

template <Scalar T>
HungerVector<T> parse_hunger(const MarkovChain<T>& chain, const std::string& text) {
    if (text.empty()) return HungerVector<T>(chain.size(), T(0));
    HungerVector<T> h;
    for (const auto& tok : split(text, ',')) h.push_back(ScalarTraits<T>::from_rational(parse_exact(tok)));
    check_hunger_size(chain, h);
    return h;
}

inline std::vector<std::int64_t> parse_ints(const std::string& text) {
    std::vector<std::int64_t> out;
    if (text.empty()) return out;
    for (const auto& tok : split(text, ',')) {
        const Rational r = parse_exact(tok);
        if (!is_integer(r)) throw Error(Errc::invalid_argument, "'" + tok + "' is not an integer");
        out.push_back(r.get_num().get_si());
    }
    return out;
}

template <Scalar T>
std::size_t require_state(const MarkovChain<T>& chain, const std::string& ref, const char* flag) {
    if (ref.empty()) throw Error(Errc::invalid_argument, std::string(flag) + " is required");
    return chain.state_index(ref);
}

inline MarkovChain<double> to_float(const MarkovChain<Rational>& chain) {
    Matrix<double> p(chain.size(), chain.size());
    for (std::size_t i = 0; i < chain.size(); ++i)
        for (std::size_t j = 0; j < chain.size(); ++j) p(i, j) = chain.prob(i, j).get_d();
    return MarkovChain<double>(std::move(p), chain.labels());
}

inline AnyChain load(const Options& opt) {
    if (opt.chain.empty()) throw Error(Errc::invalid_argument, "--chain is required");
    AnyChain chain = load_chain(opt.chain);
    if (opt.mode.empty() || opt.mode == mode_name(std::visit([](const auto& c) { return c.mode; }, chain))) return chain;
    if (opt.mode == "float") return to_float(std::get<MarkovChain<Rational>>(chain));
    if (opt.mode == "rational") throw Error(Errc::mode_mismatch, "a float chain cannot be read in rational mode");
    throw Error(Errc::invalid_argument, "unknown mode '" + opt.mode + "'");
}

template <Scalar T>
const MarkovChain<Rational>& require_rational_chain(const MarkovChain<T>& chain, std::string_view what) {
    if constexpr (ScalarTraits<T>::exact)
        return chain;
    else
        throw Error(Errc::float_mode_unsupported, std::string(what) + " needs a rational chain");
}

template <class Range>
std::string joined_counts(const Range& counts) {
    std::string out;
    for (auto c : counts) {
        if (!out.empty()) out += ',';
        out += std::to_string(c);
    }
    return out;
}

class Runner {
public:
    Runner(const Options& opt, std::ostream& out, std::ostream& err) : opt_(opt), out_(out), err_(err) {}

    template <Scalar T>
    void validate(const MarkovChain<T>& chain) {
        out_ << chain_to_json(chain).dump(2) << '\n';
        const auto absorbing = absorbing_states(chain);
        err_ << "valid " << mode_name(chain.mode) << " chain, " << chain.size() << " states\n";
        err_ << "absorbing: " << (absorbing.empty() ? "none" : labels(chain, absorbing)) << '\n';
        err_ << "irreducible: " << (is_irreducible(chain) ? "yes" : "no") << '\n';
    }

    template <Scalar T>
    void simulate(const MarkovChain<T>& chain) {
        const auto h0 = parse_hunger(chain, opt_.h0);
        csv::trace_header(out_, chain.size());
        csv::trace_row(out_, 0, "", h0);
        const auto trace = run(chain, h0, opt_.steps, csv::TraceWriter<T>{out_, chain});
        err_ << "steps: " << trace.steps << '\n';
        err_ << "firing vector: " << joined_counts(trace.visits) << '\n';
        err_ << "final hunger: " << csv::join(trace.final_h, ',') << '\n';
    }

    template <Scalar T>
    void chip_add(const MarkovChain<T>& chain) {
        const auto h0 = parse_hunger(chain, opt_.h0);
        const std::size_t at = require_state(chain, opt_.at, "--at");
        csv::trace_header(out_, chain.size());
        csv::trace_row(out_, 0, "", h0);
        const auto res = hungerlab::chip_add(chain, h0, at, opt_.cap, csv::TraceWriter<T>{out_, chain});
        err_ << "fired: " << labels(chain, res.trace.fired) << '\n';
        err_ << "final hunger: " << csv::join(res.h, ',') << '\n';
    }

    template <Scalar T>
    void stationary(const MarkovChain<T>& chain) {
        const auto h0 = parse_hunger(chain, opt_.h0);
        const auto pi = stationary_distribution(chain);
        const std::string exact = csv::join(pi, ';');
        std::vector<std::uint64_t> visits(chain.size(), 0);
        T sup(0);
        std::uint64_t argsup = 0;
        csv::profile_header(out_);
        run(chain, h0, opt_.steps, [&](const StepEvent& ev, const HungerVector<T>&) {
            ++visits[ev.state];
            const T n = ScalarTraits<T>::from_count(ev.step);
            std::vector<T> est;
            T dist(0);
            for (std::size_t i = 0; i < visits.size(); ++i) {
                est.push_back(T(ScalarTraits<T>::from_count(visits[i]) / n));
                dist += abs_value(T(est.back() - pi[i]));
            }
            T scaled = dist * n;
            if (scaled > sup) {
                sup = scaled;
                argsup = ev.step;
            }
            out_ << ev.step << ',' << csv::join(est, ';') << ',' << exact << ',' << format(dist) << ',' << format(scaled)
                 << '\n';
        });
        err_ << "stationary: " << csv::join(pi, ',') << '\n';
        err_ << "sup N*L1: " << format(sup) << " at N = " << argsup << '\n';
    }

    template <Scalar T>
    void profile(const std::vector<ProfileRow<T>>& rows, const T& exact, std::string_view what) {
        csv::profile_header(out_);
        csv::profile_rows(out_, rows);
        err_ << what << " exact: " << format(exact) << '\n';
        if (!rows.empty()) {
            err_ << what << " estimate at N = " << rows.back().n << ": " << format(rows.back().estimate) << '\n';
            const auto trend = check_trend(rows);
            err_ << "max N*deviation: head " << format(trend.head_max) << ", last decile " << format(trend.tail_max) << '\n';
        }
    }

    template <Scalar T>
    void hitting(const MarkovChain<T>& chain) {
        const std::size_t v = require_state(chain, opt_.from, "--from");
        const std::size_t u = require_state(chain, opt_.to, "--to");
        const auto rows = hitting_sweep(chain, v, u, opt_.steps);
        const auto absorbing = absorbing_states(chain);
        const auto exact = hitting_probabilities(chain, v);
        profile(rows, exact[static_cast<std::size_t>(std::find(absorbing.begin(), absorbing.end(), u) - absorbing.begin())],
                "hitting " + chain.label(u));
    }

    template <Scalar T>
    void absorb(const MarkovChain<T>& chain) {
        const std::size_t v = require_state(chain, opt_.from, "--from");
        const auto rows = absorption_sweep(chain, v, opt_.steps);
        profile(rows, expected_absorption_time(reroute(chain, v)), std::string_view("absorption time"));
    }

    template <Scalar T>
    void escape(const MarkovChain<T>& chain) {
        const std::size_t v = require_state(chain, opt_.from, "--from");
        const std::size_t u = require_state(chain, opt_.to, "--to");
        const auto rows = escape_sweep(chain, v, u, opt_.steps);
        const T exact = rows.empty() ? escape_probability(chain, v, u, 1).exact : rows.front().exact;
        profile(rows, exact, std::string_view("escape probability"));
    }

    template <Scalar T>
    void return_time(const MarkovChain<T>& chain) {
        const std::size_t v = require_state(chain, opt_.from, "--from");
        const auto rows = return_time_sweep(chain, v, opt_.steps);
        const T exact = rows.empty() ? expected_return_time(chain, v, 1).exact : rows.front().exact;
        profile(rows, exact, std::string_view("return time"));
    }

    template <Scalar T>
    void cycle(const MarkovChain<T>& chain) {
        const auto& rc = require_rational_chain(chain, "cycle");
        const auto h0 = parse_hunger(rc, opt_.h0);
        const auto info = find_cycle(rc, h0, opt_.cap);
        csv::trace_header(out_, rc.size());
        csv::trace_row(out_, 0, "", info.representative);
        run(rc, info.representative, info.period, csv::TraceWriter<Rational>{out_, rc});
        err_ << "entry steps: " << info.entry_steps << '\n';
        err_ << "period: " << info.period << '\n';
        err_ << "order: " << labels(rc, info.order) << '\n';
        err_ << "order class: " << info.order_class << '\n';
        err_ << "cycle visits: " << joined_counts(info.cycle_visits) << '\n';
        if (absorbing_states(rc).empty() && is_irreducible(rc))
            err_ << "stationary lcd: " << lcd_of_stationary(rc).get_str() << '\n';
    }

    GridSpec grid() const {
        if (opt_.bounds.size() != 2) throw Error(Errc::invalid_argument, "--bounds needs two values");
        return GridSpec::square(parse_exact(opt_.bounds[0]), parse_exact(opt_.bounds[1]), parse_exact(opt_.step));
    }

    template <Scalar T>
    void basin(const MarkovChain<T>& chain) {
        const auto& rc = require_rational_chain(chain, "basin");
        const auto map = basin_scan(rc, grid(), opt_.cap);
        csv::basin_rows(out_, map);

        std::string classes_path = opt_.classes;
        if (classes_path.empty() && !opt_.output.empty()) classes_path = opt_.output + ".classes";
        if (!classes_path.empty()) {
            std::ofstream file(classes_path);
            if (!file) throw Error(Errc::invalid_argument, "cannot write " + classes_path);
            csv::basin_classes(file, map);
        }

        std::size_t recurrent = 0, capped = 0;
        for (const auto& c : map.cells) {
            recurrent += c.recurrent;
            capped += c.cap_exceeded;
        }
        err_ << "cells: " << map.cells.size() << ", recurrent: " << recurrent << ", cap exceeded: " << capped << '\n';
        for (std::size_t i = 0; i < map.classes.size(); ++i) err_ << "class " << i << ": " << map.classes[i] << '\n';
        if (!classes_path.empty()) err_ << "classes written to " << classes_path << '\n';
    }

    template <Scalar T>
    void cover(const MarkovChain<T>& chain) {
        const auto& rc = require_rational_chain(chain, "cover");
        const auto h = parse_hunger(rc, opt_.h0);
        const auto res = covering_check(rc, h, opt_.cap);
        out_ << "state,h,x,u\n";
        for (std::size_t i = 0; i < rc.size(); ++i)
            out_ << rc.label(i) << ',' << to_string(h[i]) << ',' << to_string(res.recurrent[i]) << ','
                 << to_string(res.translate[i]) << '\n';
        err_ << "x reached after " << res.steps << " steps\n";
        err_ << "h - x in lattice: " << (res.covered ? "yes" : "no") << '\n';
    }

    template <Scalar T>
    void conjectures(const MarkovChain<T>& chain) {
        const auto& rc = require_rational_chain(chain, "conjectures");
        std::optional<GridSpec> g;
        if (!opt_.bounds.empty()) g = grid();
        const Rational lo = g ? g->h1_lo : Rational(-3, 2), hi = g ? g->h1_hi : Rational(3, 2);
        const auto samples = random_hyperplane_samples(rc.size(), opt_.samples, lo, hi, opt_.seed);
        const auto report = conjecture_reports(rc, samples, g, opt_.cap);

        out_ << "sample,h,recurrent,period,lcd,counterexample\n";
        for (std::size_t i = 0; i < report.period.samples.size(); ++i) {
            const auto& s = report.period.samples[i];
            out_ << i << ',' << csv::join(s.h, ';') << ',';
            if (s.cap_exceeded)
                out_ << "cap,,";
            else
                out_ << (s.recurrent ? "true" : "false") << ',' << s.period;
            out_ << ',' << report.period.lcd.get_str() << ',' << (s.counterexample ? "true" : "false") << '\n';
        }
        err_ << "period check: " << report.period.samples.size() << " samples, " << report.period.counterexamples
             << " with period != " << report.period.lcd.get_str() << ", " << report.period.cap_failures << " capped\n";
        if (report.tiling) {
            err_ << "tiling check: " << report.tiling->recurrent_points << " recurrent grid points, "
                 << report.tiling->translates_checked << " translates, " << report.tiling->overlaps.size()
                 << " overlaps\n";
            for (const auto& o : report.tiling->overlaps)
                err_ << "  overlap at " << csv::join(o.point, ',') << " shifted by (" << o.a << ',' << o.b << ")\n";
        }
    }

    template <Scalar T>
    void engel(const MarkovChain<T>& chain) {
        const auto& rc = require_rational_chain(chain, "engel");
        const auto res = engel_run(rc, ChipConfig{parse_ints(opt_.c0), parse_ints(opt_.d)}, opt_.cap);
        out_ << "step,fired\n";
        for (std::size_t k = 0; k < res.fired.size(); ++k) out_ << k + 1 << ',' << rc.label(res.fired[k]) << '\n';
        err_ << "repeat after " << res.repeat_start << " firings, period " << res.period << '\n';
        err_ << "firing counts: " << joined_counts(res.counts) << '\n';
    }

    template <Scalar T>
    void rotor(const MarkovChain<T>& chain) {
        const auto& rc = require_rational_chain(chain, "rotor");
        const std::size_t start = opt_.from.empty() ? 0 : rc.state_index(opt_.from);
        std::vector<std::size_t> init;
        for (auto x : parse_ints(opt_.rotor)) {
            if (x < 0) throw Error(Errc::invalid_argument, "rotor positions must be nonnegative");
            init.push_back(static_cast<std::size_t>(x));
        }
        const auto res = rotor_run(rc, start, std::move(init), opt_.steps);
        out_ << "step,state\n";
        for (std::size_t k = 0; k < res.itinerary.size(); ++k) out_ << k << ',' << rc.label(res.itinerary[k]) << '\n';
        err_ << "visits: " << joined_counts(res.visits) << '\n';
        if (res.periodic)
            err_ << "periodic after " << res.periodic->entry_steps << " steps, period " << res.periodic->period
                 << ", cycle visits " << joined_counts(res.periodic->cycle_visits) << '\n';
        else
            err_ << "no repeat within " << opt_.steps << " steps\n";
    }

    void compare2() {
        const auto cmp = compare_two_state(parse_exact(opt_.q), opt_.steps);
        csv::compare_rows(out_, cmp);
        err_ << "hunger itinerary alternates: " << (cmp.hunger_alternates ? "yes" : "no") << '\n';
        err_ << "max deviation over N >= 2: hunger " << to_string(cmp.hunger_max) << ", rotor " << to_string(cmp.rotor_max)
             << '\n';
    }

    void lazy_simulate() {
        if (opt_.lazy == "goldbug") {
            const GoldbugChain chain;
            SparseHunger h{{GoldbugChain::index_of(-1), Rational(-1, 2)},
                           {GoldbugChain::index_of(0), Rational(-1, 2)},
                           {GoldbugChain::index_of(1), Rational(-1, 2)}};
            long at = 1;
            if (!opt_.at.empty()) at = parse_ints(opt_.at).at(0);
            if (at < -1) throw Error(Errc::invalid_argument, "goldbug states start at -1");
            sparse(chain, std::move(h), GoldbugChain::index_of(at));
        } else if (opt_.lazy == "harmonic") {
            const HarmonicChain chain;
            std::size_t at = HarmonicChain::index_of(5, 0);
            if (!opt_.at.empty()) {
                const auto parts = split(std::string_view(opt_.at).substr(opt_.at.front() == 'v' ? 1 : 0), '_');
                if (parts.size() != 2) throw Error(Errc::invalid_argument, "harmonic states look like v5_0");
                const auto ij = parse_ints(parts[0] + "," + parts[1]);
                if (ij[0] < ij[1] || ij[1] < 0) throw Error(Errc::invalid_argument, "harmonic state needs i >= j >= 0");
                at = HarmonicChain::index_of(static_cast<std::size_t>(ij[0]), static_cast<std::size_t>(ij[1]));
            }
            sparse(chain, {}, at);
        } else {
            throw Error(Errc::invalid_argument, "unknown lazy chain '" + opt_.lazy + "'");
        }
    }

private:
    template <Scalar T, class Range>
    static std::string labels(const MarkovChain<T>& chain, const Range& states) {
        std::string out;
        for (std::size_t s : states) {
            if (!out.empty()) out += ' ';
            out += chain.label(s);
        }
        return out;
    }

    template <LazyChain C>
    void sparse(const C& chain, SparseHunger h, std::size_t at) {
        csv::sparse_header(out_);
        const auto trace = lazy_run(chain, std::move(h), at, opt_.steps, csv::SparseTraceWriter<C>{out_, chain});
        err_ << "fires: " << trace.steps << (trace.absorbed ? ", absorbed at " + chain.label(trace.fired.back()) : "")
             << '\n';
    }

    const Options& opt_;
    std::ostream& out_;
    std::ostream& err_;
};

inline int exit_code(Errc e) {
    switch (e) {
    case Errc::cap_exceeded:
    case Errc::orbit_memory_exceeded: return nonterminating;
    case Errc::float_mode_unsupported: return unsupported_mode;
    default: return usage;
    }
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Hunger-game simulation and analysis for finite Markov chains"};
    app.require_subcommand(1);

    auto chain_flags = [&](CLI::App* sub) {
        sub->add_option("--chain", opt.chain, "chain definition file")->required();
        sub->add_option("--mode", opt.mode, "read the chain as rational or float");
        sub->add_option("--output,-o", opt.output, "write CSV here instead of standard output");
    };
    auto steps_flag = [&](CLI::App* sub) { sub->add_option("--steps,-N", opt.steps, "number of steps")->capture_default_str(); };
    auto cap_flag = [&](CLI::App* sub) { sub->add_option("--cap", opt.cap, "step cap")->capture_default_str()->check(CLI::PositiveNumber); };
    auto h0_flag = [&](CLI::App* sub) { sub->add_option("--h0", opt.h0, "initial hunger, comma-separated (default 0)"); };

    auto* validate = app.add_subcommand("validate", "check a chain file and print it normalized");
    chain_flags(validate);

    auto* simulate = app.add_subcommand("simulate", "hunger-game trace");
    simulate->add_option("--chain", opt.chain, "chain definition file");
    simulate->add_option("--mode", opt.mode, "read the chain as rational or float");
    simulate->add_option("--output,-o", opt.output, "write CSV here instead of standard output");
    simulate->add_option("--lazy", opt.lazy, "built-in countable chain: goldbug or harmonic")->excludes("--chain");
    simulate->add_option("--at", opt.at, "chip insertion state (--lazy only)");
    steps_flag(simulate);
    h0_flag(simulate);

    auto* chip = app.add_subcommand("chip-add", "apply the chip addition operator at one state");
    chain_flags(chip);
    chip->add_option("--at", opt.at, "insertion state")->required();
    cap_flag(chip);
    h0_flag(chip);

    auto* stationary = app.add_subcommand("stationary", "discrepancy profile of v/N against the stationary distribution");
    chain_flags(stationary);
    steps_flag(stationary);
    h0_flag(stationary);

    auto* hitting = app.add_subcommand("hitting", "hitting-probability estimates a_N");
    chain_flags(hitting);
    hitting->add_option("--from", opt.from, "start state")->required();
    hitting->add_option("--to", opt.to, "absorbing target")->required();
    steps_flag(hitting);

    auto* absorb = app.add_subcommand("absorb", "absorption-time estimates b_N");
    chain_flags(absorb);
    absorb->add_option("--from", opt.from, "start state")->required();
    steps_flag(absorb);

    auto* escape = app.add_subcommand("escape", "escape-probability estimates");
    chain_flags(escape);
    escape->add_option("--from", opt.from, "start state")->required();
    escape->add_option("--to", opt.to, "target state")->required();
    steps_flag(escape);

    auto* ret = app.add_subcommand("return-time", "expected-return-time estimates");
    chain_flags(ret);
    ret->add_option("--from", opt.from, "state")->required();
    steps_flag(ret);

    auto* cycle = app.add_subcommand("cycle", "find the periodic orbit reached from h0");
    chain_flags(cycle);
    cap_flag(cycle);
    h0_flag(cycle);

    auto* basin = app.add_subcommand("basin", "classify grid points of a 3-state chain");
    chain_flags(basin);
    basin->add_option("--bounds", opt.bounds, "lo hi for both h1 and h2")->expected(2)->required();
    basin->add_option("--step", opt.step, "grid spacing")->capture_default_str();
    basin->add_option("--classes", opt.classes, "order-class file (default <output>.classes)");
    cap_flag(basin);

    auto* cover = app.add_subcommand("cover", "split h into a recurrent vector plus a lattice vector");
    chain_flags(cover);
    h0_flag(cover);
    cap_flag(cover);

    auto* conj = app.add_subcommand("conjectures", "empirical period and tiling checks");
    chain_flags(conj);
    conj->add_option("--samples", opt.samples, "random hunger vectors")->capture_default_str();
    conj->add_option("--seed", opt.seed, "sample seed")->capture_default_str();
    conj->add_option("--bounds", opt.bounds, "sample range, and tiling grid for 3 states")->expected(2);
    conj->add_option("--step", opt.step, "tiling grid spacing")->capture_default_str();
    cap_flag(conj);

    auto* engel = app.add_subcommand("engel", "Engel chip-firing until a configuration repeats");
    chain_flags(engel);
    engel->add_option("--c0", opt.c0, "initial chips, comma-separated")->required();
    engel->add_option("--d", opt.d, "thresholds (default: lcd of each row)");
    cap_flag(engel);

    auto* rotor = app.add_subcommand("rotor", "rotor-router walk");
    chain_flags(rotor);
    rotor->add_option("--from", opt.from, "start state (default first)");
    rotor->add_option("--rotor", opt.rotor, "initial rotor positions, 0-based, comma-separated");
    steps_flag(rotor);

    auto* compare = app.add_subcommand("compare2", "two-state hunger game against the rotor walk");
    compare->add_option("--q", opt.q, "switching probability")->capture_default_str();
    compare->add_option("--output,-o", opt.output, "write CSV here instead of standard output");
    steps_flag(compare);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return e.get_exit_code() == 0 ? ok : usage;
    }

    try {
        std::ofstream file;
        if (!opt.output.empty()) {
            file.open(opt.output);
            if (!file) throw Error(Errc::invalid_argument, "cannot write " + opt.output);
        }
        std::ostream& sink = opt.output.empty() ? out : file;
        Runner runner(opt, sink, err);

        const auto* sub = app.get_subcommands().front();
        const std::string name = sub->get_name();
        if (name == "compare2") {
            runner.compare2();
            return ok;
        }
        if (name == "simulate" && !opt.lazy.empty()) {
            runner.lazy_simulate();
            return ok;
        }

        const AnyChain chain = load(opt);
        std::visit(
            [&](const auto& c) {
                if (name == "validate") runner.validate(c);
                else if (name == "simulate") runner.simulate(c);
                else if (name == "chip-add") runner.chip_add(c);
                else if (name == "stationary") runner.stationary(c);
                else if (name == "hitting") runner.hitting(c);
                else if (name == "absorb") runner.absorb(c);
                else if (name == "escape") runner.escape(c);
                else if (name == "return-time") runner.return_time(c);
                else if (name == "cycle") runner.cycle(c);
                else if (name == "basin") runner.basin(c);
                else if (name == "cover") runner.cover(c);
                else if (name == "conjectures") runner.conjectures(c);
                else if (name == "engel") runner.engel(c);
                else if (name == "rotor") runner.rotor(c);
            },
            chain);
        return ok;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code(e.code());
    }
}

}  // namespace hungerlab::cli
