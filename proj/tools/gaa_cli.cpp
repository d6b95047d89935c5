// Copyright 2026 The gaa Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Talks to the simulator exclusively through the
// C API in gaa.h.

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gaa/gaa.h"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed_check = 1;
constexpr int exit_usage = 2;
constexpr int exit_domain = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Decimal, or binary with a 0b prefix (qubit 0 is the rightmost digit).
std::uint64_t parse_index(const std::string &text) {
    std::string_view s = text;
    int base = 10;
    if (s.size() > 2 && s[0] == '0' && (s[1] == 'b' || s[1] == 'B')) {
        base = 2;
        s.remove_prefix(2);
    }
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v, base);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw UsageError("bad basis index '" + text + "'");
    }
    return v;
}

double parse_number(std::string_view s, const std::string &whole) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw UsageError("bad number '" + whole + "'");
    }
    return v;
}

// A decimal, or a multiple of pi such as "pi", "5pi/6", "2*pi/3".
double parse_angle(const std::string &text) {
    const auto pos = text.find("pi");
    if (pos == std::string::npos) {
        return parse_number(text, text);
    }
    std::string_view head(text.data(), pos);
    if (!head.empty() && head.back() == '*') {
        head.remove_suffix(1);
    }
    const double numerator = head.empty() ? 1.0 : parse_number(head, text);
    std::string_view tail(text.data() + pos + 2, text.size() - pos - 2);
    double denominator = 1.0;
    if (!tail.empty()) {
        if (tail.front() != '/') {
            throw UsageError("bad angle '" + text + "'");
        }
        tail.remove_prefix(1);
        denominator = parse_number(tail, text);
    }
    return numerator * std::numbers::pi / denominator;
}

std::string utc_now() {
    const std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

struct Options {
    unsigned n = 0;
    std::string gamma = "0";
    std::string tau;
    std::string word = "0";
    unsigned k = 0;
    double alpha = 0.0;
    long long m = -1;
    unsigned long long m_max = 0;
    std::vector<std::string> deltas{"0", "0.01", "0.02", "0.05"};
    std::vector<std::string> phis{"pi", "5pi/6", "2pi/3", "pi/2"};
    unsigned trials = 20;
    unsigned long long seed = 0;
    std::string format = "json";
    std::string out = "-";
    unsigned dense_cap = 12;
    std::string circuit;
    bool identity_v = false;
    bool timestamp = false;
};

class Session {
  public:
    Session() : ctx_(gaa_context_new()) {
        if (ctx_ == nullptr) {
            throw std::bad_alloc();
        }
    }
    ~Session() {
        gaa_record_free(record_);
        gaa_context_free(ctx_);
    }
    Session(const Session &) = delete;
    Session &operator=(const Session &) = delete;

    gaa_context *ctx() const { return ctx_; }
    gaa_record **slot() { return &record_; }
    gaa_record *record() const { return record_; }

    // Returns the process exit code for a failed status.
    int check(gaa_status st) const {
        if (st == GAA_OK) {
            return exit_ok;
        }
        std::cerr << "error: " << gaa_status_name(st) << ": "
                  << gaa_context_last_error(ctx_) << '\n';
        return st == GAA_ERR_INVALID_ARGUMENT ? exit_usage : exit_domain;
    }

  private:
    gaa_context *ctx_;
    gaa_record *record_ = nullptr;
};

class ParamWriter {
  public:
    ParamWriter(Session &s) : s_(s) {}
    void i(const char *key, std::int64_t v) {
        gaa_record_set_param_int(s_.ctx(), s_.record(), key, v);
    }
    void d(const char *key, double v) {
        gaa_record_set_param_double(s_.ctx(), s_.record(), key, v);
    }
    void str(const char *key, const std::string &v) {
        gaa_record_set_param_string(s_.ctx(), s_.record(), key, v.c_str());
    }
    void list(const char *key, const std::vector<double> &v) {
        gaa_record_set_param_doubles(s_.ctx(), s_.record(), key, v.data(), v.size());
    }

  private:
    Session &s_;
};

int write_output(Session &s, const Options &o) {
    char *text = nullptr;
    const gaa_format fmt = o.format == "tsv" ? GAA_FORMAT_TSV : GAA_FORMAT_JSON;
    if (const int rc = s.check(gaa_record_serialize(s.ctx(), s.record(), fmt, &text))) {
        return rc;
    }
    std::string body(text);
    gaa_string_free(text);
    if (o.out == "-") {
        std::cout << body;
        std::cout.flush();
        return std::cout ? exit_ok : exit_domain;
    }
    std::ofstream f(o.out, std::ios::binary);
    f << body;
    if (!f) {
        std::cerr << "error: io_error: cannot write " << o.out << '\n';
        return exit_domain;
    }
    return exit_ok;
}

std::string read_file(const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw UsageError("cannot read circuit file '" + path + "'");
    }
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

int dispatch(const std::string &command, const Options &o) {
    Session s;
    if (const int rc = s.check(gaa_context_set_dense_cap(s.ctx(), o.dense_cap))) {
        return rc;
    }
    const std::uint64_t seed = o.seed;
    gaa_status st = GAA_OK;
    std::vector<double> deltas;
    std::vector<double> phis;
    int passed = 1;

    if (command == "search-wh") {
        st = gaa_search_wh(s.ctx(), o.n, parse_index(o.tau), o.m, seed, s.slot());
    } else if (command == "search-from") {
        st = gaa_search_from(s.ctx(), o.n, parse_index(o.gamma), parse_index(o.tau), o.m,
                             seed, s.slot());
    } else if (command == "search-near") {
        st = gaa_search_near(s.ctx(), o.n, parse_index(o.word), parse_index(o.tau), o.k,
                             o.alpha, o.m, seed, s.slot());
        if (st == GAA_ERR_DOMAIN && o.k == o.n && o.alpha <= 0.0) {
            std::cerr << "hint: k = n leaves no matching bits; use search-wh\n";
        }
    } else if (command == "boost") {
        const std::string text = read_file(o.circuit);
        st = gaa_boost(s.ctx(), text.c_str(), o.n, parse_index(o.gamma),
                       parse_index(o.tau), o.m, seed, s.slot());
    } else if (command == "sweep") {
        st = gaa_sweep(s.ctx(), o.n, parse_index(o.gamma), parse_index(o.tau), o.m_max,
                       s.slot());
    } else if (command == "sensitivity") {
        for (const auto &d : o.deltas) {
            deltas.push_back(parse_angle(d));
        }
        st = gaa_sensitivity(s.ctx(), o.n, parse_index(o.tau), deltas.data(),
                             deltas.size(), o.trials, seed, s.slot());
    } else if (command == "phases") {
        for (const auto &p : o.phis) {
            phis.push_back(parse_angle(p));
        }
        st = gaa_phases(s.ctx(), o.n, parse_index(o.tau), phis.data(), phis.size(),
                        o.m_max, s.slot());
    } else if (command == "conjugator") {
        st = gaa_conjugator(s.ctx(), o.n, parse_index(o.gamma), parse_index(o.tau), seed,
                            o.m_max, o.identity_v ? 1 : 0, s.slot());
    } else if (command == "verify") {
        st = gaa_verify(s.ctx(), o.n, o.trials, seed, o.m_max, s.slot(), &passed);
    } else {
        throw UsageError("unknown command '" + command + "'");
    }
    if (const int rc = s.check(st)) {
        return rc;
    }

    // Full resolved configuration goes into every record.
    ParamWriter p(s);
    p.str("command", command);
    p.i("n", o.n);
    if (command == "search-from" || command == "boost" || command == "sweep" ||
        command == "conjugator") {
        p.i("gamma", static_cast<std::int64_t>(parse_index(o.gamma)));
    }
    if (command != "verify") {
        p.i("tau", static_cast<std::int64_t>(parse_index(o.tau)));
    }
    if (command == "search-near") {
        p.i("word", static_cast<std::int64_t>(parse_index(o.word)));
        p.i("k", o.k);
    }
    if (command.rfind("search-", 0) == 0 || command == "boost") {
        double m_used = static_cast<double>(o.m);
        gaa_record_value(s.ctx(), s.record(), 0, "m", &m_used);
        p.i("m", static_cast<std::int64_t>(m_used));
    }
    if (command == "boost") {
        p.str("circuit", o.circuit);
    }
    if (command == "sweep" || command == "phases" || command == "conjugator" ||
        command == "verify") {
        p.i("m_max", static_cast<std::int64_t>(o.m_max));
    }
    if (command == "sensitivity") {
        p.list("deltas", deltas);
    }
    if (command == "phases") {
        p.list("phis", phis);
    }
    if (command == "sensitivity" || command == "verify") {
        p.i("trials", o.trials);
    }
    if (command == "conjugator") {
        p.i("identity_v", o.identity_v ? 1 : 0);
    }
    p.i("seed", static_cast<std::int64_t>(seed));
    p.str("format", o.format);
    p.str("out", o.out);
    p.i("dense_cap", o.dense_cap);
    if (o.timestamp) {
        gaa_record_set_timestamp(s.ctx(), s.record(), utc_now().c_str());
    }

    if (const int rc = write_output(s, o)) {
        return rc;
    }
    if (!passed) {
        std::cerr << "verify: residuals exceed tolerance\n";
        return exit_failed_check;
    }
    return exit_ok;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Generalized amplitude amplification simulator"};
    app.set_version_flag("--version", std::string(gaa_version()));
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App *c) {
        c->add_option("--seed", o.seed, "Random seed")->capture_default_str();
        c->add_option("--format", o.format, "Output format")
            ->check(CLI::IsMember({"json", "tsv"}))
            ->capture_default_str();
        c->add_option("--out", o.out, "Output path, - for stdout")->capture_default_str();
        c->add_option("--dense-cap", o.dense_cap, "Largest n for dense matrices")
            ->check(CLI::Range(1, 30))
            ->capture_default_str();
        c->add_flag("--timestamp", o.timestamp, "Record the wall-clock time in meta");
    };
    auto index_opt = [&](CLI::App *c, const char *name, std::string &target,
                         const char *help, bool required) {
        auto *opt = c->add_option(name, target, help);
        if (required) {
            opt->required();
        } else {
            opt->capture_default_str();
        }
    };
    auto n_opt = [&](CLI::App *c, bool required = true) {
        auto *opt = c->add_option("--n", o.n, "Number of qubits")->check(CLI::Range(1, 30));
        if (required) {
            opt->required();
        }
    };
    auto m_opt = [&](CLI::App *c) {
        c->add_option("--m", o.m, "Iterations (default: m*)")->check(CLI::Range(-1LL, 1LL << 40));
    };

    auto *wh = app.add_subcommand("search-wh", "Walsh-Hadamard search from |0>");
    n_opt(wh);
    index_opt(wh, "--tau", o.tau, "Target index (decimal or 0b...)", true);
    m_opt(wh);
    common(wh);

    auto *from = app.add_subcommand("search-from", "Walsh-Hadamard search from any state");
    n_opt(from);
    index_opt(from, "--gamma", o.gamma, "Start index", true);
    index_opt(from, "--tau", o.tau, "Target index", true);
    m_opt(from);
    common(from);

    auto *near = app.add_subcommand("search-near", "Search within Hamming distance k");
    n_opt(near);
    index_opt(near, "--word", o.word, "Known word", true);
    index_opt(near, "--tau", o.tau, "Target index", true);
    near->add_option("--k", o.k, "Hamming distance to the target")->required();
    near->add_option("--alpha", o.alpha, "Biased-gate parameter (default n/k)");
    m_opt(near);
    common(near);

    auto *boost = app.add_subcommand("boost", "Amplify an algorithm given as a gate list");
    n_opt(boost, false);
    boost->add_option("--circuit", o.circuit, "Gate-list file")->required();
    index_opt(boost, "--gamma", o.gamma, "Start index", false);
    index_opt(boost, "--tau", o.tau, "Target index", true);
    m_opt(boost);
    common(boost);

    auto *sweep = app.add_subcommand("sweep", "Simulated vs modelled success per iteration");
    n_opt(sweep);
    index_opt(sweep, "--gamma", o.gamma, "Start index", false);
    index_opt(sweep, "--tau", o.tau, "Target index", true);
    sweep->add_option("--m-max", o.m_max, "Largest iteration count")->required();
    common(sweep);

    auto *sens = app.add_subcommand("sensitivity", "Robustness under perturbed gates");
    n_opt(sens);
    index_opt(sens, "--tau", o.tau, "Target index", true);
    sens->add_option("--deltas", o.deltas, "Perturbation scales in radians")
        ->delimiter(',')
        ->capture_default_str();
    sens->add_option("--trials", o.trials, "Trials per delta")->capture_default_str();
    common(sens);

    auto *phases = app.add_subcommand("phases", "Cost of non-inverting oracle phases");
    n_opt(phases);
    index_opt(phases, "--tau", o.tau, "Target index", true);
    phases->add_option("--phis", o.phis, "Oracle phases (decimal or k*pi/d)")
        ->delimiter(',')
        ->capture_default_str();
    phases->add_option("--m-max", o.m_max, "Largest iteration count (default 200)");
    common(phases);

    auto *conj = app.add_subcommand("conjugator", "V^-1 I_tau V against the effective V U");
    n_opt(conj);
    index_opt(conj, "--gamma", o.gamma, "Start index", false);
    index_opt(conj, "--tau", o.tau, "Target index", true);
    conj->add_option("--m-max", o.m_max, "Largest iteration count (default 100)");
    conj->add_flag("--identity-v", o.identity_v, "Use V = identity");
    common(conj);

    auto *verify = app.add_subcommand("verify", "Two-level model residual suite");
    n_opt(verify);
    verify->add_option("--trials", o.trials, "Random unitaries")->capture_default_str();
    verify->add_option("--m-max", o.m_max, "Iterations per trial (default 200)");
    common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        std::cerr << "error: usage: " << e.what() << '\n';
        std::cerr << "run with --help for usage\n";
        return exit_usage;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    if (o.m_max == 0) {
        if (command == "phases" || command == "verify") {
            o.m_max = 200;
        } else if (command == "conjugator") {
            o.m_max = 100;
        }
    }
    try {
        return dispatch(command, o);
    } catch (const UsageError &e) {
        std::cerr << "error: usage: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception &e) {
        std::cerr << "error: internal_error: " << e.what() << '\n';
        return exit_domain;
    }
}
