#pragma once

#include "json.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hhcli {

using nlohmann::json;

struct Params {
    int m = 0, N = 0;
    unsigned characteristic = 0;
};

// thrown for bad user input; the CLI maps it to exit code 2
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

void validate(const Params& p);  // throws UsageError

// Every command returns a document of the shape
//   {"params": {...}, "suite": ..., "results": [{"n", "computed", "formula", "match", ...}],
//    "failures": [...]}
// plus command-specific keys. A document passes when "failures" is empty.
json dims(const Params& p, int max_degree, bool check_formulas, std::optional<int> oracle_max);
json centre(const Params& p);
json basis(const Params& p, int degree);
json product(const Params& p, const std::string& left, const std::string& right);

// suite: relations, generation, quotient, resolution or all; cap < 0 picks the default
json verify(const Params& p, const std::string& suite, int cap);

struct GridAxis {
    std::vector<int> m, N;
    std::vector<unsigned> characteristic;
};
GridAxis parse_grid(const std::string& text);  // "m=1..6;N=1..3;char=0,2,3,5"

// runs the listed suites at every grid point; writes one JSON file per point plus
// summary.json and summary.csv into out_dir. max_degree < 0 means 2m+3.
json report(const GridAxis& grid, int max_degree, const std::vector<std::string>& suites, const std::string& out_dir);

bool passed(const json& doc);

// structured error object for a failed command
json error_document(const Params& p, const std::string& suite, const std::exception& e);
// bad parameters, ids or relation text, as opposed to a failure inside a computation
bool is_input_error(const std::exception& e);

std::string to_csv(const json& doc);
std::string to_text(const json& doc);

}  // namespace hhcli
