#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ratmoduli/json_io.hpp"
#include "ratmoduli/mapgen.hpp"

namespace {

using namespace ratmoduli;

constexpr int kExitOk = 0;
constexpr int kExitPartial = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitIo = 4;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    if (path.empty()) {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        if (std::cin.bad()) throw IoError("failed to read stdin");
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("failed to read input file: " + path);
    return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        std::cout.flush();
        if (!std::cout) throw IoError("failed to write stdout");
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + path);
    out << content;
    out.flush();
    if (!out) throw IoError("failed to write output file: " + path);
}

double parse_real_strict(const std::string& text, const std::string& where) {
    if (text.empty()) throw InvalidInputError(where + ": empty number");
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        throw InvalidInputError(where + ": cannot parse number '" + text + "'");
    }
    if (used != text.size()) {
        throw InvalidInputError(where + ": trailing characters in number '" + text + "'");
    }
    return value;
}

// Accepts 1, -2.5, 1e-3, i, -i, 2i, 1+2i, 1.5-0.5i and the like.
Complex parse_complex_literal(std::string text, const std::string& where) {
    std::string cleaned;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) cleaned.push_back(ch);
    }
    if (cleaned.empty()) throw InvalidInputError(where + ": empty value");
    if (cleaned.back() != 'i' && cleaned.back() != 'I') {
        return Complex(parse_real_strict(cleaned, where), 0.0);
    }
    cleaned.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t k = cleaned.size(); k-- > 1;) {
        char ch = cleaned[k];
        if ((ch == '+' || ch == '-') && cleaned[k - 1] != 'e' && cleaned[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    auto imag_value = [&](std::string part) {
        if (part.empty() || part == "+") return 1.0;
        if (part == "-") return -1.0;
        return parse_real_strict(part, where);
    };
    if (split == std::string::npos) {
        return Complex(0.0, imag_value(cleaned));
    }
    double re = parse_real_strict(cleaned.substr(0, split), where);
    double im = imag_value(cleaned.substr(split));
    return Complex(re, im);
}

SpectrumD2 parse_spectrum(const std::string& text) {
    std::vector<std::string> parts;
    std::string current;
    for (char ch : text) {
        if (ch == ',') {
            parts.push_back(current);
            current.clear();
        } else {
            current.push_back(ch);
        }
    }
    parts.push_back(current);
    if (parts.size() != 3) {
        throw InvalidInputError("spectrum: expected three comma-separated values, got " +
                                std::to_string(parts.size()));
    }
    SpectrumD2 s;
    s.m1 = parse_complex_literal(parts[0], "spectrum[0]");
    s.m2 = parse_complex_literal(parts[1], "spectrum[1]");
    s.m3 = parse_complex_literal(parts[2], "spectrum[2]");
    return s;
}

struct CommonOpts {
    std::string in_path;
    std::string out_path;
    Tolerances tol;
    bool degree_check = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_input) {
    if (with_input) cmd->add_option("--in", opts.in_path, "Input file (default: stdin)");
    cmd->add_option("--out", opts.out_path, "Output file (default: stdout)");
    cmd->add_option("--tol-cluster", opts.tol.cluster_radius, "Root clustering radius")
        ->capture_default_str();
    cmd->add_option("--tol-zero", opts.tol.zero_test, "Zero coefficient threshold")
        ->capture_default_str();
}

int run_analyze(const CommonOpts& opts) {
    const std::string text = read_input(opts.in_path);
    nlohmann::json parsed;
    try {
        parsed = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInputError(std::string("JSON parse error: ") + e.what());
    }
    MapDocument doc = map_document_from_json(parsed);
    Analysis a = analyze(doc, opts.tol, opts.degree_check);
    write_output(opts.out_path, analysis_to_json(a).dump(2) + "\n");
    return kExitOk;
}

int run_from_spectrum(const CommonOpts& opts, const std::string& spectrum_text) {
    SpectrumD2 s = parse_spectrum(spectrum_text);
    if (!fatou_valid(s, opts.tol)) {
        throw InvalidInputError("Fatou index formula violated: indices 1/(1-m) do not sum to 1");
    }
    RationalMap r = spectrum_to_normalized(s, opts.tol);
    MapDocument doc{r.degree(), r.num, r.den};
    write_output(opts.out_path, map_document_to_json(doc).dump(2) + "\n");
    return kExitOk;
}

int run_batch(const CommonOpts& opts) {
    const std::string text = read_input(opts.in_path);
    std::istringstream lines(text);
    std::string line;
    std::string out;
    int line_no = 0;
    bool any_failed = false;
    while (std::getline(lines, line)) {
        ++line_no;
        bool blank = true;
        for (char ch : line) {
            if (!std::isspace(static_cast<unsigned char>(ch))) {
                blank = false;
                break;
            }
        }
        if (blank) continue;
        Json record;
        try {
            MapDocument doc = map_document_from_json(nlohmann::json::parse(line));
            record = analysis_to_json(analyze(doc, opts.tol, opts.degree_check));
        } catch (const std::exception& e) {
            any_failed = true;
            record = Json();
            record["line"] = line_no;
            Json err;
            err["type"] = dynamic_cast<const InvalidInputError*>(&e)        ? "invalid_input"
                          : dynamic_cast<const nlohmann::json::parse_error*>(&e) ? "invalid_input"
                          : dynamic_cast<const NumericalError*>(&e)         ? "numerical"
                                                                            : "error";
            err["message"] = e.what();
            record["error"] = std::move(err);
        }
        out += record.dump();
        out += '\n';
    }
    write_output(opts.out_path, out);
    return any_failed ? kExitPartial : kExitOk;
}

int run_fixed_points_csv(const CommonOpts& opts) {
    const std::string text = read_input(opts.in_path);
    nlohmann::json parsed;
    try {
        parsed = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInputError(std::string("JSON parse error: ") + e.what());
    }
    MapDocument doc = map_document_from_json(parsed);
    auto canon = canonicalize(doc.num, doc.den, opts.tol);
    FixedPointSet fps = fixed_points(canon.map, opts.tol);
    write_output(opts.out_path, fixed_points_csv(fps));
    return kExitOk;
}

int run_gen(const CommonOpts& opts, std::uint64_t seed, int degree, int count) {
    if (degree < 2) throw InvalidInputError("gen: degree must be >= 2");
    if (count < 0) throw InvalidInputError("gen: count must be >= 0");
    SplitMix64 rng(seed);
    std::string out;
    for (int k = 0; k < count; ++k) {
        RationalMap r = random_canonical_map(rng, degree, opts.tol);
        MapDocument doc{r.degree(), r.num, r.den};
        out += map_document_to_json(doc).dump();
        out += '\n';
    }
    write_output(opts.out_path, out);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Moduli space computations for rational maps of degree >= 2"};
    app.require_subcommand(1);

    CommonOpts analyze_opts;
    auto* cmd_analyze = app.add_subcommand("analyze", "Full analysis of one map (JSON in/out)");
    add_common(cmd_analyze, analyze_opts, true);
    cmd_analyze->add_flag("--degree-check", analyze_opts.degree_check,
                          "Reject documents whose declared degree disagrees with the coefficients");

    CommonOpts spectrum_opts;
    std::string spectrum_text;
    auto* cmd_spectrum =
        app.add_subcommand("from-spectrum", "Normalized degree-2 map from a multiplier spectrum");
    add_common(cmd_spectrum, spectrum_opts, false);
    cmd_spectrum
        ->add_option("--spectrum", spectrum_text,
                     "Three comma-separated multipliers, e.g. 1,1,1 or 0.5,2i,1-1i")
        ->required();

    CommonOpts batch_opts;
    auto* cmd_batch =
        app.add_subcommand("batch", "Analyze newline-delimited map documents (JSONL in/out)");
    add_common(cmd_batch, batch_opts, true);
    cmd_batch->add_flag("--degree-check", batch_opts.degree_check,
                        "Reject documents whose declared degree disagrees with the coefficients");

    CommonOpts csv_opts;
    auto* cmd_csv =
        app.add_subcommand("fixed-points-csv", "Fixed points of one map as CSV for plotting");
    add_common(cmd_csv, csv_opts, true);

    CommonOpts gen_opts;
    std::uint64_t seed = 0;
    int gen_degree = 2;
    int gen_count = 1;
    auto* cmd_gen = app.add_subcommand("gen", "Generate random canonical maps (JSONL out)");
    add_common(cmd_gen, gen_opts, false);
    cmd_gen->add_option("--seed", seed, "PRNG seed")->capture_default_str();
    cmd_gen->add_option("--degree", gen_degree, "Map degree")->capture_default_str();
    cmd_gen->add_option("--count", gen_count, "Number of maps")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (app.got_subcommand(cmd_analyze)) return run_analyze(analyze_opts);
        if (app.got_subcommand(cmd_spectrum)) return run_from_spectrum(spectrum_opts, spectrum_text);
        if (app.got_subcommand(cmd_batch)) return run_batch(batch_opts);
        if (app.got_subcommand(cmd_csv)) return run_fixed_points_csv(csv_opts);
        if (app.got_subcommand(cmd_gen)) return run_gen(gen_opts, seed, gen_degree, gen_count);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const InvalidInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitOk;
}
