#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hob/checks.hpp"
#include "hob/errors.hpp"
#include "hob/homology.hpp"
#include "hob/json_io.hpp"
#include "hob/openbook.hpp"
#include "hob/plumbing.hpp"
#include "hob/seifert.hpp"

namespace hob {

// One binary, subcommand style. Exit codes: 0 success, 1 usage or schema
// violations, 2 domain errors (and failed `check` runs). All output is
// deterministic for identical inputs; `check` randomness is seeded and the
// seed is echoed in the report.

namespace cli_detail {

struct Options {
    std::string input;
    std::string format = "json";
    std::string output;
    std::uint64_t seed = 0;
    long long cases = 100;
};

inline void add_io_options(CLI::App* sub, Options& opt, bool with_input = true) {
    if (with_input)
        sub->add_option("--input", opt.input, "input path, '-' for stdin, or inline JSON")
            ->required();
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "dot", "text"}))
        ->capture_default_str();
    sub->add_option("--output", opt.output, "output path (default stdout)");
}

inline std::string read_input_text(const std::string& input, std::istream& in) {
    if (input == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    std::size_t first = input.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (input[first] == '{' || input[first] == '['))
        return input;  // inline JSON
    std::ifstream file(input);
    if (!file) throw SchemaError("input", "cannot open file: " + input);
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

inline json parse_json_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw SchemaError("input", "invalid JSON");
    return j;
}

inline std::string word_to_text(const TwistWord& w) {
    if (w.letters.empty()) return "1";
    std::string s;
    for (const Letter& l : w.letters) {
        if (!s.empty()) s += " ";
        s += "t_" + l.curve;
        if (l.exponent != 1) s += "^" + std::to_string(l.exponent);
    }
    return s;
}

inline std::string open_book_to_text(const OpenBook& ob) {
    std::string s;
    s += "page genus: " + std::to_string(ob.page_genus) + "\n";
    s += "binding components: " + std::to_string(ob.boundary_count()) + "\n";
    s += "boundary exponents:";
    for (long long m : ob.boundary_exponents) s += " " + std::to_string(m);
    s += "\n";
    TwistWord monodromy = ob.boundary_word();
    for (const Letter& l : ob.extra_word.letters) monodromy.append(l);
    s += "monodromy: " + word_to_text(monodromy) + "\n";
    return s;
}

inline std::string yesno(bool b) { return b ? "yes" : "no"; }

} // namespace cli_detail

inline std::string render_check_report(const CheckReport& report, const std::string& format) {
    if (format == "json") {
        json props = json::array();
        for (const PropertyResult& p : report.properties) {
            json item{{"name", p.name}, {"pass", p.pass}, {"cases", p.cases}};
            if (!p.pass) item["detail"] = p.detail;
            props.push_back(item);
        }
        json j{{"seed", report.seed},
               {"cases", report.cases},
               {"properties", props},
               {"all_pass", report.all_pass()}};
        return j.dump(2) + "\n";
    }
    std::string s;
    s += "seed: " + std::to_string(report.seed) + "\n";
    s += "cases: " + std::to_string(report.cases) + "\n";
    long long passed = 0;
    for (const PropertyResult& p : report.properties) {
        if (p.pass) {
            ++passed;
            s += "PASS " + p.name + " (" + std::to_string(p.cases) + " cases)\n";
        } else {
            s += "FAIL " + p.name + ": " + p.detail + "\n";
        }
    }
    s += std::to_string(passed) + "/" + std::to_string(report.properties.size()) +
         " properties passed\n";
    return s;
}

inline int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
                   std::ostream& err) {
    CLI::App app{"horizontal open books on Seifert fibered 3-manifolds"};
    app.require_subcommand(1);

    cli_detail::Options opt;
    CLI::App* normalize = app.add_subcommand(
        "normalize", "put a star plumbing diagram into non-positive standard form");
    cli_detail::add_io_options(normalize, opt);
    CLI::App* invariants =
        app.add_subcommand("invariants", "rational Euler number, determinant, first homology");
    cli_detail::add_io_options(invariants, opt);
    CLI::App* openbook =
        app.add_subcommand("openbook", "construct the horizontal open book");
    cli_detail::add_io_options(openbook, opt);
    CLI::App* classify =
        app.add_subcommand("classify", "classify a boundary-twist monodromy");
    cli_detail::add_io_options(classify, opt);
    CLI::App* present =
        app.add_subcommand("present", "contact (+-1)-surgery presentation of a monodromy");
    cli_detail::add_io_options(present, opt);
    CLI::App* check = app.add_subcommand("check", "run the cross-module verification suite");
    cli_detail::add_io_options(check, opt, false);
    check->add_option("--input", opt.input, "optional invariants to pin the suite to");
    check->add_option("--seed", opt.seed, "random seed")->capture_default_str();
    check->add_option("--cases", opt.cases, "cases per property")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    try {
        std::reverse(args.begin(), args.end());  // CLI11 takes a reversed vector
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        std::string text;
        int exit_code = 0;
        const std::string& format = opt.format;

        auto unsupported_format = [&]() -> SchemaError {
            return SchemaError("format", "'" + format + "' is not supported for this command");
        };

        if (normalize->parsed()) {
            SeifertInvariants inv = invariants_from_json(
                cli_detail::parse_json_text(cli_detail::read_input_text(opt.input, in)));
            NormalizeResult norm = normalize_to_standard(inv);
            if (format == "json") {
                json j{{"graph", graph_to_json(norm.graph)},
                       {"transcript", transcript_to_json(norm.transcript)}};
                text = j.dump(2) + "\n";
            } else if (format == "dot") {
                text = graph_to_dot(norm.graph);
            } else {
                text += "vertices: " + std::to_string(norm.graph.vertices.size()) + "\n";
                for (const PlumbingVertex& v : norm.graph.vertices)
                    text += "  " + v.id + ": e=" + std::to_string(v.euler) +
                            ", g=" + std::to_string(v.genus) + "\n";
                text += "moves: " + std::to_string(norm.transcript.size()) + "\n";
                text += "nonpositive standard: " +
                        cli_detail::yesno(is_nonpositive_standard(norm.graph)) + "\n";
            }
        } else if (invariants->parsed()) {
            json input =
                cli_detail::parse_json_text(cli_detail::read_input_text(opt.input, in));
            PlumbingGraph graph;
            std::optional<Rat> euler;
            if (input.is_object() && input.contains("vertices")) {
                graph = graph_from_json(input);
                if (is_star_shaped(graph)) euler = rational_euler_from_graph(graph);
            } else if (input.is_object() && input.contains("coefficients")) {
                SeifertInvariants inv = invariants_from_json(input);
                graph = star_from_seifert(inv);
                euler = rational_euler(inv);
            } else {
                throw SchemaError("input", "expected Seifert invariants or a plumbing graph");
            }
            Int det = determinant(linking_matrix(graph));
            AbelianGroup h = first_homology(graph);
            if (format == "json") {
                json j{{"determinant", detail::int_to_json(det)},
                       {"euler", euler ? rational_to_json(*euler) : json(nullptr)},
                       {"homology", group_to_json(h)}};
                text = j.dump(2) + "\n";
            } else if (format == "text") {
                text += "euler: " + (euler ? to_string(*euler) : std::string("undefined")) + "\n";
                text += "determinant: " + det.get_str() + "\n";
                text += "H1: " + h.to_string() + "\n";
            } else {
                throw unsupported_format();
            }
        } else if (openbook->parsed()) {
            SeifertInvariants inv = invariants_from_json(
                cli_detail::parse_json_text(cli_detail::read_input_text(opt.input, in)));
            OpenBook ob = construct_horizontal_open_book(inv);
            if (format == "json")
                text = open_book_to_json(ob).dump(2) + "\n";
            else if (format == "text")
                text = cli_detail::open_book_to_text(ob);
            else
                throw unsupported_format();
        } else if (classify->parsed()) {
            json input =
                cli_detail::parse_json_text(cli_detail::read_input_text(opt.input, in));
            long long genus =
                detail::int64_from_json(detail::member(input, "genus", "classify"), "genus");
            const json& exps = detail::member(input, "exponents", "classify");
            if (!exps.is_array()) throw SchemaError("exponents", "expected an array");
            std::vector<long long> exponents;
            for (std::size_t i = 0; i < exps.size(); ++i)
                exponents.push_back(detail::int64_from_json(
                    exps[i], "exponents[" + std::to_string(i) + "]"));
            Classification c = classify_boundary_word(genus, exponents);
            if (format == "json") {
                text = classification_to_json(c).dump(2) + "\n";
            } else if (format == "text") {
                text += "seifert fibered: " + cli_detail::yesno(c.seifert_fibered) + "\n";
                text += "horizontal realizable: " + cli_detail::yesno(c.horizontal_realizable) +
                        "\n";
                text += "stein fillable: " + cli_detail::yesno(c.stein_fillable) + "\n";
                text += "tight incompatible: " + cli_detail::yesno(c.tight_incompatible) + "\n";
                text += "exceptional case: " + cli_detail::yesno(c.exceptional_case) + "\n";
            } else {
                throw unsupported_format();
            }
        } else if (present->parsed()) {
            json input =
                cli_detail::parse_json_text(cli_detail::read_input_text(opt.input, in));
            long long genus =
                detail::int64_from_json(detail::member(input, "genus", "present"), "genus");
            long long r = detail::int64_from_json(
                detail::member(input, "boundary_count", "present"), "boundary_count");
            if (r < 1) throw SchemaError("boundary_count", "must be at least 1");
            TwistWord w = word_from_json(detail::member(input, "word", "present"), "word");
            if (input.contains("disjoint")) {
                const json& dis = input["disjoint"];
                if (!dis.is_array()) throw SchemaError("disjoint", "expected an array");
                for (std::size_t i = 0; i < dis.size(); ++i) {
                    const json& p = dis[i];
                    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
                        throw SchemaError("disjoint[" + std::to_string(i) + "]",
                                          "expected a pair of curve names");
                    w.declare_disjoint(p[0].get<std::string>(), p[1].get<std::string>());
                }
            }
            SurgeryPresentation pres =
                surgery_presentation(genus, static_cast<std::size_t>(r), w);
            if (format == "json") {
                text = presentation_to_json(pres).dump(2) + "\n";
            } else if (format == "text") {
                text += cli_detail::open_book_to_text(pres.base);
                text += "surgeries:";
                if (pres.surgeries.empty()) text += " none";
                for (const auto& [curve, sign] : pres.surgeries)
                    text += " (" + curve + ", " + (sign > 0 ? "+1" : "-1") + ")";
                text += "\n";
            } else {
                throw unsupported_format();
            }
        } else if (check->parsed()) {
            std::optional<SeifertInvariants> pinned;
            if (!opt.input.empty())
                pinned = invariants_from_json(
                    cli_detail::parse_json_text(cli_detail::read_input_text(opt.input, in)));
            if (format == "dot") throw unsupported_format();
            CheckReport report = run_checks(opt.seed, opt.cases, pinned);
            text = render_check_report(report, format);
            if (!report.all_pass()) exit_code = 2;
        }

        if (!opt.output.empty()) {
            std::ofstream file(opt.output, std::ios::binary);
            if (!file) throw SchemaError("output", "cannot open file: " + opt.output);
            file << text;
        } else {
            out << text;
        }
        return exit_code;
    } catch (const SchemaError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace hob
