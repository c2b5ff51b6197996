#pragma once

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "twistlink/builders.hpp"
#include "twistlink/ledger.hpp"

namespace twistlink {

// ---------------------------------------------------------------------------
// Command-line front end.
//
// Exit codes: 0 all checks pass, 1 analysis found violations or
// counterexamples, 2 usage or I/O errors.
// ---------------------------------------------------------------------------

namespace cli_detail {

struct NamedDiagram {
    std::string name;
    PlanarDiagram diagram;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// One PD per file, or a JSON-lines corpus of {"name":..., "pd":...} records.
inline std::vector<NamedDiagram> load_diagrams(const std::string& path) {
    std::string text = read_file(path);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw std::runtime_error("empty input file " + path);
    std::vector<NamedDiagram> out;
    if (text[first] == '{') {
        std::istringstream lines(text);
        std::string line;
        int n = 0;
        while (std::getline(lines, line)) {
            auto ls = line.find_first_not_of(" \t\r");
            if (ls == std::string::npos) continue;
            ordered_json j = ordered_json::parse(line);
            NamedDiagram nd;
            nd.name = j.contains("name") ? j["name"].get<std::string>() : ("line" + std::to_string(++n));
            nd.diagram = parse_pd(j["pd"].get<std::string>());
            out.push_back(std::move(nd));
        }
    } else {
        out.push_back({path, parse_pd(text)});
    }
    return out;
}

inline void write_output(const std::string& json_path, const ordered_json& j, std::ostream& fallback) {
    std::string bytes = j.dump(2);
    bytes += "\n";
    if (json_path.empty()) {
        fallback << bytes;
    } else {
        std::ofstream out(json_path);
        if (!out) throw std::runtime_error("cannot open " + json_path);
        out << bytes;
    }
}

inline void maybe_ledger(const std::string& ledger_path, const std::string& command,
                         const std::string& input_bytes, const ordered_json& parameters, const ordered_json& result,
                         const ordered_json& counts, long long runtime_ms) {
    if (ledger_path.empty()) return;
    RunLedgerEntry e;
    e.command = command;
    e.input_digest = digest_string(input_bytes);
    e.parameters = parameters;
    e.result_digest = digest_string(result.dump());
    e.counts = counts;
    e.runtime_ms = runtime_ms;
    append_ledger(ledger_path, e);
}

}  // namespace cli_detail

inline int cli_main(const std::vector<std::string>& args) {
    CLI::App app{"twistlink: twisted checkerboard surfaces and embedded-graph lemma verification"};
    app.require_subcommand(1);

    std::string in_path, json_path, ledger_path, out_path;
    int ntw = 2, ii = 0, rtw = 6, max_edges = 6;
    bool blue_only = false, count_only = false;
    std::string color_s = "blue", stage_s = "checkerboard", lemma_s = "sphere", context_s = "sphere";

    auto* cmd_parse = app.add_subcommand("parse", "parse a PD file and emit the diagram JSON");
    cmd_parse->add_option("file", in_path)->required();
    cmd_parse->add_option("--json", json_path);

    auto* cmd_analyze = app.add_subcommand("analyze", "twist-region analysis with validation");
    cmd_analyze->add_option("file", in_path)->required();
    cmd_analyze->add_option("--json", json_path);
    cmd_analyze->add_option("--ledger", ledger_path);

    auto* cmd_augment = app.add_subcommand("augment", "augment, reduce, and validate the construction");
    cmd_augment->add_option("file", in_path)->required();
    cmd_augment->add_option("--ntw", ntw)->check(CLI::PositiveNumber);
    cmd_augment->add_option("--i", ii)->check(CLI::IsMember({0, 2}));
    cmd_augment->add_flag("--blue-only", blue_only);
    cmd_augment->add_option("--json", json_path);
    cmd_augment->add_option("--ledger", ledger_path);

    auto* cmd_surfaces = app.add_subcommand("surfaces", "surface reports for a construction");
    cmd_surfaces->add_option("file", in_path)->required();
    cmd_surfaces->add_option("--ntw", ntw)->check(CLI::PositiveNumber);
    cmd_surfaces->add_option("--i", ii)->check(CLI::IsMember({0, 2}));
    cmd_surfaces->add_flag("--blue-only", blue_only);
    cmd_surfaces->add_option("--color", color_s)->check(CLI::IsMember({"blue", "red"}));
    cmd_surfaces->add_option("--stage", stage_s)->check(CLI::IsMember({"checkerboard", "punctured", "twisted"}));
    cmd_surfaces->add_option("--json", json_path);

    auto* cmd_lemmas = app.add_subcommand("lemmas", "embedded-graph lemma campaigns");
    cmd_lemmas->require_subcommand(1);
    auto* cmd_verify = cmd_lemmas->add_subcommand("verify", "search for counterexamples");
    cmd_verify->add_option("--lemma", lemma_s)
        ->check(CLI::IsMember({"sphere", "disk", "torus", "square", "bigon-bound", "bigon-bound-square"}));
    cmd_verify->add_option("--rtw", rtw);
    cmd_verify->add_option("--max-edges", max_edges)->required();
    cmd_verify->add_option("--json", json_path);
    cmd_verify->add_option("--ledger", ledger_path);
    auto* cmd_enum = cmd_lemmas->add_subcommand("enumerate", "stream or count graphs");
    cmd_enum->add_option("--context", context_s)
        ->check(CLI::IsMember({"sphere", "disk", "square", "annulus", "torus"}));
    cmd_enum->add_option("--max-edges", max_edges)->required();
    cmd_enum->add_flag("--count-only", count_only);
    cmd_enum->add_option("--json", json_path);
    cmd_enum->add_option("--ledger", ledger_path);

    auto* cmd_dot = app.add_subcommand("export-dot", "DOT of the face-adjacency graph");
    cmd_dot->add_option("file", in_path)->required();
    cmd_dot->add_option("--out", out_path);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        std::ostringstream dummy;
        int code = app.exit(e, dummy, dummy);
        std::cerr << dummy.str();
        return code == 0 ? 0 : 2;
    }

    try {
        auto t0 = std::chrono::steady_clock::now();
        auto elapsed_ms = [&] {
            return static_cast<long long>(
                std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
                    .count());
        };

        if (*cmd_parse) {
            auto diagrams = cli_detail::load_diagrams(in_path);
            ordered_json out = ordered_json::array();
            for (const auto& nd : diagrams) {
                Coloring col = nd.diagram.crossing_count() ? checkerboard(nd.diagram) : Coloring{};
                ordered_json j = diagram_to_json(nd.diagram, &col);
                j["name"] = nd.name;
                out.push_back(j);
            }
            cli_detail::write_output(json_path, out.size() == 1 ? out[0] : out, std::cout);
            return 0;
        }

        if (*cmd_analyze) {
            std::string input = cli_detail::read_file(in_path);
            auto diagrams = cli_detail::load_diagrams(in_path);
            ordered_json out = ordered_json::array();
            bool violations = false;
            for (const auto& nd : diagrams) {
                ordered_json j = twist_report_to_json(nd.diagram);
                j["name"] = nd.name;
                if (!j["witnesses"].empty() || !validate(nd.diagram).all_pass()) violations = true;
                out.push_back(j);
            }
            ordered_json result = out.size() == 1 ? out[0] : out;
            cli_detail::write_output(json_path, result, std::cout);
            ordered_json counts;
            counts["diagrams"] = diagrams.size();
            cli_detail::maybe_ledger(ledger_path, "analyze", input, ordered_json{{"file", in_path}}, result, counts,
                                     elapsed_ms());
            return violations ? 1 : 0;
        }

        if (*cmd_augment || *cmd_surfaces) {
            std::string input = cli_detail::read_file(in_path);
            auto diagrams = cli_detail::load_diagrams(in_path);
            ordered_json out = ordered_json::array();
            bool failures = false;
            for (const auto& nd : diagrams) {
                const PlanarDiagram& d = nd.diagram;
                Coloring col = checkerboard(d);
                ordered_json j;
                j["name"] = nd.name;
                AugmentedDiagram L = augment(d, col, ntw, blue_only ? AugmentFilter::Blue : AugmentFilter::All);
                AugmentedDiagram Li = reduce_twists(L, ii);
                if (*cmd_surfaces) {
                    Color color = (color_s == "blue") ? Color::Blue : Color::Red;
                    SurfaceReport rep;
                    if (stage_s == "checkerboard")
                        rep = checkerboard_surface_report(Li.base, Li.base_coloring, color);
                    else if (stage_s == "punctured")
                        rep = punctured_surface_report(Li, color);
                    else
                        rep = twisted_surface_report(Li, color);
                    j["surface"] = surface_report_to_json(rep);
                } else {
                    j["augmented"] = augmented_to_json(Li);
                    if (Li.circles.empty()) j["degenerate"] = "no twist region reached N_tw; stage is the seed";
                    ordered_json surfaces = ordered_json::array();
                    for (Color c : {Color::Blue, Color::Red}) {
                        surfaces.push_back(
                            surface_report_to_json(checkerboard_surface_report(Li.base, Li.base_coloring, c)));
                        surfaces.push_back(surface_report_to_json(punctured_surface_report(Li, c)));
                        surfaces.push_back(surface_report_to_json(twisted_surface_report(Li, c)));
                    }
                    j["surfaces"] = surfaces;
                    // the structural lemmas concern the blue-filtered construction
                    AugmentedDiagram LB =
                        blue_only ? Li : reduce_twists(augment(d, col, ntw, AugmentFilter::Blue), ii);
                    StructureReport sr = validate_augmented(LB);
                    j["structure"] = structure_report_to_json(sr);
                    if (!sr.all_pass()) failures = true;
                }
                out.push_back(j);
            }
            ordered_json result = out.size() == 1 ? out[0] : out;
            cli_detail::write_output(json_path, result, std::cout);
            ordered_json params;
            params["ntw"] = ntw;
            params["i"] = ii;
            params["blue_only"] = blue_only;
            cli_detail::maybe_ledger(ledger_path, *cmd_augment ? "augment" : "surfaces", input, params, result,
                                     ordered_json{{"diagrams", diagrams.size()}}, elapsed_ms());
            return failures ? 1 : 0;
        }

        if (*cmd_verify) {
            LemmaName lemma = LemmaName::Sphere;
            if (lemma_s == "disk") lemma = LemmaName::Disk;
            if (lemma_s == "torus") lemma = LemmaName::Torus;
            if (lemma_s == "square") lemma = LemmaName::Square;
            if (lemma_s == "bigon-bound") lemma = LemmaName::BigonBoundDisk;
            if (lemma_s == "bigon-bound-square") lemma = LemmaName::BigonBoundSquare;
            bool uses_rtw = (lemma == LemmaName::BigonBoundDisk || lemma == LemmaName::BigonBoundSquare);
            CampaignReport rep = search_counterexamples(lemma, max_edges, uses_rtw ? rtw : 0);
            ordered_json result = campaign_to_json(rep);
            cli_detail::write_output(json_path, result, std::cout);
            ordered_json params;
            params["lemma"] = lemma_s;
            params["max_edges"] = max_edges;
            if (uses_rtw) params["rtw"] = rtw;
            ordered_json counts;
            counts["instances_checked"] = rep.instances_checked;
            counts["counterexamples"] = rep.counterexamples;
            counts["states_visited"] = rep.states_visited;
            cli_detail::maybe_ledger(ledger_path, "lemmas verify", lemma_s + std::to_string(max_edges), params,
                                     result, counts, elapsed_ms());
            return rep.counterexamples > 0 ? 1 : 0;
        }

        if (*cmd_enum) {
            Context ctx = Context::Sphere;
            if (context_s == "disk") ctx = Context::Disk;
            if (context_s == "square") ctx = Context::Square;
            if (context_s == "annulus") ctx = Context::Annulus;
            if (context_s == "torus") ctx = Context::Torus;
            Constraints c;
            long long count = 0;
            ordered_json graphs = ordered_json::array();
            Enumerator en(ctx, max_edges, c);
            en.run([&](const EmbeddedGraph& g) {
                ++count;
                if (!count_only) graphs.push_back(graph_to_json(g));
            });
            ordered_json result;
            result["context"] = context_s;
            result["max_edges"] = max_edges;
            result["count"] = count;
            result["states_visited"] = en.states_visited();
            if (!count_only) result["graphs"] = graphs;
            cli_detail::write_output(json_path, result, std::cout);
            ordered_json params;
            params["context"] = context_s;
            params["max_edges"] = max_edges;
            cli_detail::maybe_ledger(ledger_path, "lemmas enumerate", context_s + std::to_string(max_edges), params,
                                     result, ordered_json{{"count", count}}, elapsed_ms());
            return 0;
        }

        if (*cmd_dot) {
            auto diagrams = cli_detail::load_diagrams(in_path);
            Coloring col = checkerboard(diagrams.front().diagram);
            std::string dot = diagram_to_dot(diagrams.front().diagram, &col);
            if (out_path.empty()) {
                std::cout << dot;
            } else {
                std::ofstream out(out_path);
                if (!out) throw std::runtime_error("cannot open " + out_path);
                out << dot;
            }
            return 0;
        }
    } catch (const NotTwistReduced& e) {
        ordered_json j;
        j["error"] = e.what();
        j["witness"] = witness_to_json(e.witness);
        std::cerr << j.dump(2) << "\n";
        return 1;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace twistlink
