// sepgeo — command-line front end: reproduce every threshold, measure,
// sweep and ball/PPT verdict from a shell, with machine-readable output.
//
// Exit codes: 0 success, 2 usage / bad input file, 3 domain precondition,
// 4 output I/O failure.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sepgeo/sepgeo.hpp"

namespace {

using sepgeo::Json;

enum class OutputMode { json, csv, plain };

OutputMode parse_output_mode(const std::string& name) {
    if (name == "json") return OutputMode::json;
    if (name == "csv") return OutputMode::csv;
    if (name == "plain") return OutputMode::plain;
    throw CLI::ValidationError("--output", "must be one of json|csv|plain");
}

std::string scalar_to_string(const Json& value, int float_digits) {
    if (value.is_number_float()) return sepgeo::format_significant(value.get<double>(), float_digits);
    if (value.is_string()) return value.get<std::string>();
    return value.dump();
}

// flat documents only: arrays of integers and scalars
void emit(const Json& doc, OutputMode mode) {
    switch (mode) {
    case OutputMode::json:
        std::cout << doc.dump() << '\n';
        return;
    case OutputMode::plain:
        for (const auto& [key, value] : doc.items()) {
            std::cout << key << ": ";
            if (value.is_array()) {
                for (std::size_t i = 0; i < value.size(); ++i)
                    std::cout << (i ? " " : "") << scalar_to_string(value[i], 6);
            } else {
                std::cout << scalar_to_string(value, 6);
            }
            std::cout << '\n';
        }
        return;
    case OutputMode::csv: {
        std::string header, row;
        for (const auto& [key, value] : doc.items()) {
            if (!header.empty()) { header += ','; row += ','; }
            header += key;
            if (value.is_array()) {
                for (std::size_t i = 0; i < value.size(); ++i)
                    row += (i ? ";" : "") + scalar_to_string(value[i], 17);
            } else {
                row += scalar_to_string(value, 17);
            }
        }
        std::cout << header << '\n' << row << '\n';
        return;
    }
    }
}

// builtin state grammar: w | ghz:n | maxent:n:d | werner:n:d:p, otherwise a
// JSON matrix file path
bool looks_builtin(const std::string& spec) {
    const std::string head = spec.substr(0, spec.find(':'));
    return head == "w" || head == "ghz" || head == "maxent" || head == "werner";
}

std::vector<std::string> split_spec(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream stream(spec);
    std::string token;
    while (std::getline(stream, token, ':')) parts.push_back(token);
    return parts;
}

long parse_long_token(const std::string& token, const std::string& spec) {
    try {
        std::size_t used = 0;
        const long v = std::stol(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return v;
    } catch (const std::exception&) {
        throw CLI::ValidationError("--state", "bad number '" + token + "' in '" + spec + "'");
    }
}

double parse_double_token(const std::string& token, const std::string& spec) {
    try {
        std::size_t used = 0;
        const double v = std::stod(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return v;
    } catch (const std::exception&) {
        throw CLI::ValidationError("--state", "bad number '" + token + "' in '" + spec + "'");
    }
}

sepgeo::DensityMatrix resolve_builtin(const std::string& spec) {
    const auto parts = split_spec(spec);
    if (parts[0] == "w") {
        if (parts.size() != 1) throw CLI::ValidationError("--state", "'w' takes no parameters");
        return sepgeo::w_state();
    }
    if (parts[0] == "ghz") {
        if (parts.size() != 2) throw CLI::ValidationError("--state", "expected ghz:n");
        return sepgeo::max_entangled(static_cast<int>(parse_long_token(parts[1], spec)), 2);
    }
    if (parts[0] == "maxent") {
        if (parts.size() != 3) throw CLI::ValidationError("--state", "expected maxent:n:d");
        return sepgeo::max_entangled(static_cast<int>(parse_long_token(parts[1], spec)),
                                     static_cast<int>(parse_long_token(parts[2], spec)));
    }
    // werner
    if (parts.size() != 4) throw CLI::ValidationError("--state", "expected werner:n:d:p");
    return sepgeo::werner(static_cast<int>(parse_long_token(parts[1], spec)),
                          static_cast<int>(parse_long_token(parts[2], spec)),
                          parse_double_token(parts[3], spec));
}

sepgeo::DensityMatrix resolve_state(const std::string& spec) {
    if (looks_builtin(spec)) return resolve_builtin(spec);
    const sepgeo::MatrixRecord record = sepgeo::load_matrix(spec);
    if (!record.dims)
        throw sepgeo::FileFormatError("state file " + spec +
                                      " lacks the mandatory \"dims\" field");
    return sepgeo::validate(record.matrix, *record.dims);
}

// default measured party: the single subsystem of smallest dimension, ties
// broken toward the lowest index
std::set<int> default_party(const sepgeo::SubsystemDims& dims) {
    int best = 0;
    for (int k = 1; k < dims.count(); ++k)
        if (dims.dim(k) < dims.dim(best)) best = k;
    return {best};
}

std::set<int> party_from_flag(const std::vector<int>& party, const sepgeo::SubsystemDims& dims) {
    if (party.empty()) return default_party(dims);
    return {party.begin(), party.end()};
}

std::uint64_t default_seed() {
    const char* env = std::getenv("SEPGEO_SEED");
    if (!env || !*env) return 0;
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(env, &used);
        if (used != std::string(env).size()) throw std::invalid_argument(env);
        return v;
    } catch (const std::exception&) {
        throw CLI::ValidationError("SEPGEO_SEED", std::string("not a 64-bit integer: ") + env);
    }
}

struct SweepSummary {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    double sum = 0.0;
    long count = 0;

    void add(double v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        sum += v;
        ++count;
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"geometric separability toolkit"};
    app.require_subcommand(1);

    std::string output_name = "json";

    // threshold
    int th_n = 0, th_d = 0;
    auto* threshold = app.add_subcommand("threshold", "Werner separability threshold and "
                                                      "absolute-separability radius for n qudits of dimension d");
    threshold->add_option("--n", th_n, "number of qudits")->required()->check(CLI::Range(2, 1024));
    threshold->add_option("--d", th_d, "local dimension")->required()->check(CLI::Range(2, 1024));
    threshold->add_option("--output", output_name, "json|csv|plain");

    // measure
    std::string me_state;
    std::vector<int> me_party;
    int me_samples = 10000;
    std::uint64_t me_seed = 0;
    bool me_seed_set = false;
    auto* measure = app.add_subcommand("measure", "entanglement e = 1 - p_max of a pure state "
                                                  "across a bipartition, with PPT and sampled-minimum oracles");
    measure->add_option("--state", me_state, "w | ghz:n | maxent:n:d | werner:n:d:p | JSON file")->required();
    measure->add_option("--party", me_party, "measured subsystem indices (default: smallest-dimension subsystem)")
        ->delimiter(',');
    measure->add_option("--samples", me_samples, "samples for the q_min oracle; 0 skips it")
        ->check(CLI::NonNegativeNumber);
    measure->add_option("--seed", me_seed, "RNG seed (overrides SEPGEO_SEED)")
        ->each([&](const std::string&) { me_seed_set = true; });
    measure->add_option("--output", output_name, "json|csv|plain");

    // sweep
    std::string sw_state, sw_out;
    std::vector<int> sw_party;
    int sw_samples = 10000;
    std::uint64_t sw_seed = 0;
    bool sw_seed_set = false;
    auto* sweep = app.add_subcommand("sweep", "measure Haar-random targets and write "
                                              "probability/distance rows to CSV");
    sweep->add_option("--state", sw_state, "w | ghz:n | maxent:n:d | werner:n:d:p | JSON file")->required();
    sweep->add_option("--party", sw_party, "measured subsystem indices")->delimiter(',');
    sweep->add_option("--samples", sw_samples, "number of Haar-random targets")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--seed", sw_seed, "RNG seed (overrides SEPGEO_SEED)")
        ->each([&](const std::string&) { sw_seed_set = true; });
    sweep->add_option("--out", sw_out, "CSV output path")->required();
    sweep->add_option("--output", output_name, "summary format: json|csv|plain");

    // ball
    int ba_n = 0, ba_d = 0;
    std::string ba_state;
    auto* ball = app.add_subcommand("ball", "absolute-separability ball membership for an "
                                            "n-qudit state");
    ball->add_option("--n", ba_n, "number of qudits")->required();
    ball->add_option("--d", ba_d, "local dimension")->required();
    ball->add_option("--state", ba_state, "state to test (builtin or JSON file)")->required();
    ball->add_option("--output", output_name, "json|csv|plain");

    // ppt
    std::string pp_state;
    std::vector<int> pp_party;
    auto* ppt = app.add_subcommand("ppt", "positive-partial-transpose verdict across a bipartition");
    ppt->add_option("--state", pp_state, "state to test (builtin or JSON file)")->required();
    ppt->add_option("--party", pp_party, "party defining the cut (default: smallest-dimension subsystem)")
        ->delimiter(',');
    ppt->add_option("--output", output_name, "json|csv|plain");

    // validate
    std::string va_file;
    auto* validate_cmd = app.add_subcommand("validate", "check a JSON matrix file against the "
                                                        "density-matrix invariants");
    validate_cmd->add_option("--file", va_file, "JSON matrix file")->required();
    validate_cmd->add_option("--output", output_name, "json|csv|plain");

    try {
        app.parse(argc, argv);

        const OutputMode mode = parse_output_mode(output_name);

        if (threshold->parsed()) {
            const double t = sepgeo::werner_threshold(th_n, th_d);
            Json doc;
            doc["threshold_p"] = t;
            doc["absolute_sep_radius"] = sepgeo::absolute_sep_radius(th_n, th_d);
            doc["n"] = th_n;
            doc["d"] = th_d;
            emit(doc, mode);
            return 0;
        }

        if (measure->parsed()) {
            const sepgeo::DensityMatrix sigma = resolve_state(me_state);
            const sepgeo::Bipartition part(party_from_flag(me_party, sigma.dims()),
                                           sigma.dims().count());
            const std::uint64_t seed = me_seed_set ? me_seed : default_seed();
            sepgeo::SeparabilityReport report;
            try {
                report = sepgeo::entanglement_measure_with_oracles(sigma, part, me_samples, seed);
            } catch (const sepgeo::PurityError&) {
                std::cerr << "measure requires a pure state\n";
                return 3;
            }
            emit(sepgeo::report_to_json(report), mode);
            return 0;
        }

        if (sweep->parsed()) {
            const sepgeo::DensityMatrix rho = resolve_state(sw_state);
            const sepgeo::Bipartition part(party_from_flag(sw_party, rho.dims()),
                                           rho.dims().count());
            const std::uint64_t seed = sw_seed_set ? sw_seed : default_seed();
            const auto outcomes = sepgeo::measurement_sweep(rho, part, sw_samples, seed);

            std::ofstream file(sw_out);
            if (!file) throw sepgeo::IoError("cannot open for writing: " + sw_out);
            sepgeo::write_sweep_csv(file, outcomes);
            file.flush();
            if (!file) throw sepgeo::IoError("write failed: " + sw_out);

            SweepSummary prob, dist;
            long undefined = 0;
            for (const auto& outcome : outcomes) {
                prob.add(outcome.probability);
                const double d = sepgeo::outcome_distance_from_center(outcome);
                if (std::isnan(d)) { ++undefined; continue; }
                dist.add(d);
            }
            Json doc;
            doc["samples"] = outcomes.size();
            doc["probability_min"] = prob.lo;
            doc["probability_max"] = prob.hi;
            doc["probability_mean"] = prob.sum / static_cast<double>(prob.count);
            doc["distance_min"] = dist.count ? dist.lo : 0.0;
            doc["distance_max"] = dist.count ? dist.hi : 0.0;
            doc["distance_mean"] = dist.count ? dist.sum / static_cast<double>(dist.count) : 0.0;
            doc["zero_probability_outcomes"] = undefined;
            doc["csv"] = sw_out;
            emit(doc, mode);
            return 0;
        }

        if (ball->parsed()) {
            if (ba_n < 2) {
                std::cerr << "ball: separability queries require n >= 2 "
                             "(the n = 1 radius has no separability meaning)\n";
                return 3;
            }
            const sepgeo::DensityMatrix rho = resolve_state(ba_state);
            const double radius = sepgeo::absolute_sep_radius(ba_n, ba_d);
            const double distance =
                sepgeo::hs_distance(rho.matrix(), sepgeo::maximally_mixed(rho.order()));
            Json doc;
            doc["n"] = ba_n;
            doc["d"] = ba_d;
            doc["radius"] = radius;
            doc["distance"] = distance;
            doc["inside"] = sepgeo::in_absolute_sep_ball(rho, ba_n, ba_d);
            emit(doc, mode);
            return 0;
        }

        if (ppt->parsed()) {
            const sepgeo::DensityMatrix rho = resolve_state(pp_state);
            const sepgeo::Bipartition part(party_from_flag(pp_party, rho.dims()),
                                           rho.dims().count());
            Json doc;
            doc["ppt"] = sepgeo::ppt_check(rho, part);
            doc["ppt_scope"] = sepgeo::ppt_scope_label(rho.dims(), part);
            doc["min_eigenvalue"] = sepgeo::ppt_min_eigenvalue(rho, part);
            doc["measured_party"] = part.measured();
            emit(doc, mode);
            return 0;
        }

        if (validate_cmd->parsed()) {
            const sepgeo::MatrixRecord record = sepgeo::load_matrix(va_file);
            const sepgeo::SubsystemDims dims =
                record.dims ? *record.dims
                            : sepgeo::SubsystemDims{static_cast<int>(record.matrix.rows())};
            const sepgeo::DensityMatrix rho = sepgeo::validate(record.matrix, dims);
            Json doc;
            doc["valid"] = true;
            doc["dim"] = rho.order();
            doc["dims"] = rho.dims().dims();
            emit(doc, mode);
            return 0;
        }

        return 2;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const sepgeo::FileFormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const sepgeo::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const sepgeo::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
