#include "lacasse/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <map>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "lacasse/composition.hpp"
#include "lacasse/series.hpp"

namespace lacasse::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

const std::map<std::string, Format> kFormats{
    {"plain", Format::plain}, {"json", Format::json}, {"csv", Format::csv}};

std::string quoted(const std::string& field) {
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string join(const std::vector<std::string>& parts, char sep) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += sep;
        out += p;
    }
    return out;
}

std::vector<std::string> labels_of(const std::vector<Route>& routes) {
    std::vector<std::string> out;
    for (Route r : routes) out.emplace_back(route_label(r));
    return out;
}

void emit(std::ostream& out, Format format, const OutputRecord& record) {
    switch (format) {
        case Format::plain: out << record.value << '\n'; break;
        case Format::json: out << to_json_line(record) << '\n'; break;
        case Format::csv: out << to_csv_row(record) << '\n'; break;
    }
}

// ---------------------------------------------------------------- value

struct ValueArgs {
    std::string quantity;
    long n = 0;
    long d = 2;
    std::string format = "plain";
};

OutputRecord compute_value(const ValueArgs& args) {
    OutputRecord record;
    record.n = args.n;
    record.quantity = args.quantity;
    const std::string& q = args.quantity;
    if (q == "alpha") {
        record.value = to_string(alpha_closed(args.n));
    } else if (q == "beta") {
        record.value = to_string(beta_closed(args.n));
    } else if (q == "s_d") {
        record.d = args.d;
        record.value = to_string(s_d_closed(args.n, args.d));
    } else if (q == "q") {
        record.value = ramanujan_q(args.n).to_string();
    } else if (q == "xi") {
        record.value = xi(args.n).to_string();
    } else if (q == "xi2") {
        record.value = xi2(args.n).to_string();
    } else if (q == "diff") {
        record.value = to_string(telescoping_difference(args.n));
    } else {
        throw std::invalid_argument("unknown quantity '" + q + "'");
    }
    return record;
}

int cmd_value(const ValueArgs& args, std::ostream& out, std::ostream& err) {
    OutputRecord record;
    try {
        record = compute_value(args);
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    const Format format = kFormats.at(args.format);
    if (format == Format::csv) out << csv_header() << '\n';
    emit(out, format, record);
    return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    long from = 1;
    long to = 1;
    std::string routes;
    long jobs = 1;
    std::uint64_t brute_cutoff = VerifyOptions{}.brute_cutoff;
    std::string format = "plain";
};

struct Outcome {
    VerificationReport report;
    std::string error;
};

Outcome failed_outcome(long n, std::string message) {
    Outcome o;
    o.report.n = n;
    o.report.alpha = alpha_closed(n);
    o.report.beta = beta_closed(n);
    o.report.difference = o.report.beta - o.report.alpha;
    o.report.expected = ipow00(ExactInt(n), static_cast<unsigned long>(n + 1));
    o.report.passed = false;
    o.error = std::move(message);
    return o;
}

void emit_report(std::ostream& out, Format format, const VerificationReport& r) {
    const auto routes = labels_of(r.routes_compared);
    if (format == Format::plain) {
        out << "n=" << r.n << " alpha=" << to_string(r.alpha) << " beta=" << to_string(r.beta)
            << " diff=" << to_string(r.difference) << " expected=" << to_string(r.expected)
            << " routes=" << join(routes, ',') << ' ' << (r.passed ? "PASS" : "FAIL") << '\n';
        return;
    }
    for (const auto& [quantity, value] :
         {std::pair{"alpha", &r.alpha}, std::pair{"beta", &r.beta}, std::pair{"diff", &r.difference}}) {
        OutputRecord rec{r.n, quantity, std::nullopt, to_string(*value), r.passed, routes};
        emit(out, format, rec);
    }
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err, const Hooks& hooks) {
    if (args.from < 1 || args.from > args.to) {
        err << "error: invalid range [" << args.from << ", " << args.to
            << "]: requires 1 <= from <= to\n";
        return kExitUsage;
    }
    if (args.jobs < 1) {
        err << "error: --jobs must be >= 1\n";
        return kExitUsage;
    }

    VerifyOptions options;
    options.brute_cutoff = args.brute_cutoff;
    if (!args.routes.empty()) {
        options.routes.clear();
        std::stringstream ss(args.routes);
        for (std::string token; std::getline(ss, token, ',');) {
            try {
                const Route r = parse_route(token);
                if (r != Route::closed) options.routes.insert(r);
            } catch (const std::invalid_argument& e) {
                err << "error: " << e.what() << '\n';
                return kExitUsage;
            }
        }
    }

    std::optional<SeriesRoute> shared;
    if (options.routes.contains(Route::series)) {
        try {
            shared.emplace(static_cast<std::size_t>(args.to), 3);
        } catch (const ConsistencyError& e) {
            err << "error: series route: " << e.what() << '\n';
            return kExitVerifyFailed;
        }
    }
    const SeriesRoute* table = shared ? &*shared : nullptr;

    const std::size_t count = static_cast<std::size_t>(args.to - args.from + 1);
    std::vector<Outcome> outcomes(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            const long n = args.from + static_cast<long>(i);
            try {
                outcomes[i].report = hooks.verify(n, options, table);
            } catch (const std::exception& e) {
                outcomes[i] = failed_outcome(n, e.what());
            }
        }
    };
    const auto threads = std::min<std::size_t>(static_cast<std::size_t>(args.jobs), count);
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    const Format format = kFormats.at(args.format);
    if (format == Format::csv) out << csv_header() << '\n';
    std::size_t passed = 0;
    for (const auto& o : outcomes) {
        emit_report(out, format, o.report);
        if (o.report.passed) {
            ++passed;
        } else {
            err << "FAIL n=" << o.report.n << (o.error.empty() ? "" : ": " + o.error) << '\n';
        }
    }
    std::ostream& summary_stream = format == Format::plain ? out : err;
    summary_stream << "summary: " << passed << " of " << count << " passed (n=" << args.from
                   << ".." << args.to << ")\n";
    return passed == count ? kExitOk : kExitVerifyFailed;
}

// ---------------------------------------------------------------- series

struct SeriesArgs {
    std::string which;
    long order = 0;
    long d = 2;
    std::string format = "plain";
};

int cmd_series(const SeriesArgs& args, std::ostream& out, std::ostream& err) {
    if (args.order < 0) {
        err << "error: --order must be >= 0\n";
        return kExitUsage;
    }
    if (args.which == "geom" && args.d < 1) {
        err << "error: --d must be >= 1\n";
        return kExitUsage;
    }
    const auto order = static_cast<std::size_t>(args.order);
    const TruncatedSeries tree = tree_series(order);
    const TruncatedSeries s = args.which == "tree" ? tree : geom_power(tree, args.d, order);
    const bool has_d = args.which == "geom";
    const std::string d_text = has_d ? std::to_string(args.d) : "";

    const Format format = kFormats.at(args.format);
    if (format == Format::csv) out << "n,quantity,d,value,scaled\n";
    for (std::size_t i = 0; i <= order; ++i) {
        const std::string coeff = s[i].to_string();
        const std::string scaled = egf_coeff(s, i).to_string();
        switch (format) {
            case Format::plain: out << i << '\t' << coeff << '\t' << scaled << '\n'; break;
            case Format::json: {
                ordered_json j;
                j["n"] = i;
                j["quantity"] = args.which;
                j["d"] = has_d ? ordered_json(args.d) : ordered_json(nullptr);
                j["value"] = coeff;
                j["scaled"] = scaled;
                out << j.dump() << '\n';
                break;
            }
            case Format::csv:
                out << quoted(std::to_string(i)) << ',' << quoted(args.which) << ','
                    << quoted(d_text) << ',' << quoted(coeff) << ','
                    << quoted(scaled) << '\n';
                break;
        }
    }
    return kExitOk;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
    long n_max = 1;
    long d = 2;
    long repetitions = 5;
    std::uint64_t brute_cutoff = VerifyOptions{}.brute_cutoff;
};

template <typename Fn>
std::pair<double, ExactInt> median_micros(long repetitions, Fn fn) {
    std::vector<double> times;
    ExactInt value;
    for (long r = 0; r < repetitions; ++r) {
        const auto start = std::chrono::steady_clock::now();
        value = fn();
        const auto stop = std::chrono::steady_clock::now();
        times.push_back(std::chrono::duration<double, std::micro>(stop - start).count());
    }
    std::sort(times.begin(), times.end());
    const std::size_t mid = times.size() / 2;
    const double median = times.size() % 2 ? times[mid] : 0.5 * (times[mid - 1] + times[mid]);
    return {median, value};
}

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
    if (args.n_max < 1 || args.d < 1 || args.repetitions < 1) {
        err << "error: bench requires --n-max >= 1, --d >= 1, --repetitions >= 1\n";
        return kExitUsage;
    }
    out << "# median wall time in microseconds over " << args.repetitions
        << " repetitions, d=" << args.d << '\n';
    out << std::left << std::setw(6) << "n" << std::setw(14) << "closed" << std::setw(14)
        << "series" << std::setw(14) << "brute" << "agree\n";
    out << std::fixed << std::setprecision(1);
    for (long n = 1; n <= args.n_max; ++n) {
        const auto [closed_us, closed] =
            median_micros(args.repetitions, [&] { return s_d_closed(n, args.d); });
        const auto [series_us, series] = median_micros(args.repetitions, [&] {
            const auto order = static_cast<std::size_t>(n);
            return egf_coeff(geom_power(tree_series(order), args.d, order), order).numerator();
        });
        bool agree = closed == series;
        std::string brute_cell = "-";
        if (CompositionCursor::count(n, args.d) <= ExactInt(std::to_string(args.brute_cutoff))) {
            const auto [brute_us, brute] =
                median_micros(args.repetitions, [&] { return xi_scaled_brute(n, args.d); });
            agree = agree && closed == brute;
            std::ostringstream cell;
            cell << std::fixed << std::setprecision(1) << brute_us;
            brute_cell = cell.str();
        }
        out << std::setw(6) << n << std::setw(14) << closed_us << std::setw(14) << series_us
            << std::setw(14) << brute_cell << (agree ? "yes" : "NO") << '\n';
    }
    return kExitOk;
}

}  // namespace

std::string to_json_line(const OutputRecord& record) {
    ordered_json j;
    j["n"] = record.n;
    j["quantity"] = record.quantity;
    j["d"] = record.d ? ordered_json(*record.d) : ordered_json(nullptr);
    j["value"] = record.value;
    j["passed"] = record.passed ? ordered_json(*record.passed) : ordered_json(nullptr);
    j["routes"] = record.routes ? ordered_json(*record.routes) : ordered_json(nullptr);
    return j.dump();
}

std::string csv_header() { return "n,quantity,d,value,passed"; }

std::string to_csv_row(const OutputRecord& record) {
    const std::string passed = record.passed ? (*record.passed ? "true" : "false") : "";
    return quoted(std::to_string(record.n)) + ',' + quoted(record.quantity) + ',' +
           quoted(record.d ? std::to_string(*record.d) : "") + ',' + quoted(record.value) + ',' +
           quoted(passed);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Hooks& hooks) {
    CLI::App app{"Exact computations around the identity xi_2(n) = xi(n) + n", "lacasse"};
    app.require_subcommand(1);
    auto format_option = [](CLI::App* sub, std::string& target) {
        sub->add_option("--format", target, "plain, json or csv")
            ->check(CLI::IsMember({"plain", "json", "csv"}))
            ->capture_default_str();
    };

    ValueArgs value_args;
    auto* value = app.add_subcommand("value", "print one exact value");
    value->add_option("quantity", value_args.quantity, "alpha | beta | s_d | q | xi | xi2 | diff")
        ->required()
        ->check(CLI::IsMember({"alpha", "beta", "s_d", "q", "xi", "xi2", "diff"}));
    value->add_option("n", value_args.n, "index")->required();
    value->add_option("--d", value_args.d, "number of parts for s_d")->capture_default_str();
    format_option(value, value_args.format);

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "check beta(n) - alpha(n) = n^(n+1) over a range");
    verify->add_option("--from", verify_args.from, "first n")->required();
    verify->add_option("--to", verify_args.to, "last n")->required();
    verify->add_option("--routes", verify_args.routes,
                       "comma list of closed,brute,series (default: all admitted)");
    verify->add_option("--jobs", verify_args.jobs, "worker threads")->capture_default_str();
    verify->add_option("--brute-cutoff", verify_args.brute_cutoff,
                       "largest brute-force term count admitted")
        ->capture_default_str();
    format_option(verify, verify_args.format);

    SeriesArgs series_args;
    auto* series = app.add_subcommand("series", "print coefficients of y(z) or (1/(1-y))^d");
    series->add_option("which", series_args.which, "tree | geom")
        ->required()
        ->check(CLI::IsMember({"tree", "geom"}));
    series->add_option("--order", series_args.order, "truncation order")->required();
    series->add_option("--d", series_args.d, "power for geom")->capture_default_str();
    format_option(series, series_args.format);

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "time closed form, series and brute force for s_d");
    bench->add_option("--n-max", bench_args.n_max, "largest n")->required();
    bench->add_option("--d", bench_args.d, "number of parts")->capture_default_str();
    bench->add_option("--repetitions", bench_args.repetitions, "timed runs per cell")
        ->capture_default_str();
    bench->add_option("--brute-cutoff", bench_args.brute_cutoff,
                      "largest brute-force term count admitted")
        ->capture_default_str();

    std::vector<const char*> argv{"lacasse"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kExitOk;
        }
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    if (value->parsed()) return cmd_value(value_args, out, err);
    if (verify->parsed()) return cmd_verify(verify_args, out, err, hooks);
    if (series->parsed()) return cmd_series(series_args, out, err);
    return cmd_bench(bench_args, out, err);
}

}  // namespace lacasse::cli
