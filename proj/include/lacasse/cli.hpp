#pragma once

// Command-line front end. `run` holds the whole program so it can be driven
// in-process by tests; tools/main.cpp only forwards argv.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "lacasse/identity.hpp"

namespace lacasse::cli {

enum class Format { plain, json, csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// One exact value; `value` is the full decimal (or p/q) rendering.
struct OutputRecord {
    long n = 0;
    std::string quantity;
    std::optional<long> d;
    std::string value;
    std::optional<bool> passed;
    std::optional<std::vector<std::string>> routes;
};

/// Single-line JSON object with keys n, quantity, d, value, passed, routes.
std::string to_json_line(const OutputRecord& record);
/// CSV row matching csv_header(); every field quoted.
std::string to_csv_row(const OutputRecord& record);
std::string csv_header();

using VerifyFn = std::function<VerificationReport(long, const VerifyOptions&, const SeriesRoute*)>;

struct Hooks {
    /// Replaced in tests to exercise the failure path.
    VerifyFn verify = [](long n, const VerifyOptions& options, const SeriesRoute* shared) {
        return verify_lacasse(n, options, shared);
    };
};

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Hooks& hooks = {});

}  // namespace lacasse::cli
