#include "CLI11.hpp"
#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace hhcli;

namespace {

struct Common {
    Params p;
    std::string format = "json";
    std::string out;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--m", c.p.m, "number of vertices")->required();
    sub->add_option("--N", c.p.N, "exponent N")->required();
    sub->add_option("--char", c.p.characteristic, "field characteristic, 0 for the rationals")->required();
    sub->add_option("--format", c.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--output", c.out, "write to this file instead of stdout");
}

void emit(const json& doc, const std::string& format, const std::string& path) {
    std::string text = format == "csv" ? to_csv(doc) : format == "text" ? to_text(doc) : doc.dump(2) + "\n";
    if (path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(path);
        if (!f) throw UsageError("cannot write " + path);
        f << text;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hochschild cohomology of the algebras Lambda_N: computation and verification"};
    app.require_subcommand(1);

    Common c;
    int max_degree = 0, degree = 0, cap = -1, oracle_max = -1;
    bool check_formulas = false;
    std::string left, right, suite = "all", grid, max_degree_text = "auto", out_dir, suites = "dims,centre,basis";

    auto* dims_cmd = app.add_subcommand("dims", "per-degree dimensions of HH^n, with the closed forms");
    add_common(dims_cmd, c);
    dims_cmd->add_option("--max-degree", max_degree)->required();
    dims_cmd->add_flag("--check-formulas", check_formulas, "also compare Hom and kernel dimensions; mismatches fail");
    dims_cmd->add_option("--oracle-max", oracle_max, "recompute degrees <= K with the bar complex");

    auto* centre_cmd = app.add_subcommand("centre", "centre basis against the closed form");
    add_common(centre_cmd, c);

    auto* basis_cmd = app.add_subcommand("basis", "named cocycle basis of one degree");
    add_common(basis_cmd, c);
    basis_cmd->add_option("--degree", degree)->required();

    auto* product_cmd = app.add_subcommand("product", "cup product of two named cocycles");
    add_common(product_cmd, c);
    product_cmd->add_option("--left", left, "e.g. phi[1,0]")->required();
    product_cmd->add_option("--right", right, "e.g. chi[2,0]")->required();

    auto* verify_cmd = app.add_subcommand("verify", "relation, generation, quotient and resolution checks");
    add_common(verify_cmd, c);
    verify_cmd->add_option("--suite", suite)->check(CLI::IsMember({"relations", "generation", "quotient", "resolution", "all"}));
    verify_cmd->add_option("--cap", cap, "degree cap");

    auto* report_cmd = app.add_subcommand("report", "run suites over a parameter grid and write JSON/CSV files");
    report_cmd->add_option("--grid", grid, "e.g. \"m=1..6;N=1..3;char=0,2,3,5\"")->required();
    report_cmd->add_option("--max-degree", max_degree_text, "number or auto (2m+3)");
    report_cmd->add_option("--out", out_dir, "output directory")->required();
    report_cmd->add_option("--suites", suites, "comma separated: dims,centre,basis,relations,generation,quotient,resolution");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::string name = app.get_subcommands().front()->get_name();
    try {
        json doc;
        if (name == "dims")
            doc = dims(c.p, max_degree, check_formulas, oracle_max >= 0 ? std::optional<int>(oracle_max) : std::nullopt);
        else if (name == "centre")
            doc = centre(c.p);
        else if (name == "basis")
            doc = basis(c.p, degree);
        else if (name == "product")
            doc = product(c.p, left, right);
        else if (name == "verify")
            doc = verify(c.p, suite, cap);
        else {
            int D = -1;
            if (max_degree_text != "auto") {
                try {
                    std::size_t used = 0;
                    D = std::stoi(max_degree_text, &used);
                    if (used != max_degree_text.size() || D < 0) throw UsageError("");
                } catch (const std::exception&) {
                    throw UsageError("--max-degree must be a number or auto");
                }
            }
            std::vector<std::string> list;
            std::stringstream ss(suites);
            for (std::string s; std::getline(ss, s, ',');)
                if (!s.empty()) list.push_back(s);
            doc = report(parse_grid(grid), D, list, out_dir);
            std::cout << "wrote " << out_dir << "/summary.json (" << doc["results"].size() << " suite runs, "
                      << doc["failures"].size() << " failures)\n";
            for (const auto& f : doc["failures"]) std::cout << "  - " << f.get<std::string>() << '\n';
            return passed(doc) ? 0 : 1;
        }
        emit(doc, c.format, c.out);
        return passed(doc) ? 0 : 1;
    } catch (const std::exception& e) {
        json err = error_document(c.p, name, e);
        std::cout << err.dump(2) << '\n';
        return is_input_error(e) ? 2 : 1;
    }
}
