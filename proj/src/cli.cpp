#include "admrank/cli.hpp"

#include "admrank/errors.hpp"
#include "admrank/serialize.hpp"
#include "admrank/svg.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace admrank::cli {

namespace {

using nlohmann::json;

std::vector<BinaryForm> parse_inputs(const std::string& spec) {
    std::vector<std::string> texts;
    if (!spec.empty() && spec[0] == '@') {
        std::ifstream in(spec.substr(1));
        if (!in) throw ParseError("cannot open input file " + spec.substr(1));
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) texts.push_back(line);
        }
        if (texts.empty()) throw ParseError("input file holds no forms");
    } else {
        texts.push_back(spec);
    }
    std::vector<BinaryForm> out;
    for (const auto& t : texts) {
        try {
            out.push_back(parse_form(t));
        } catch (const ZeroFormError& e) {
            // a zero form in the input text is rejected at the parse boundary
            throw ParseError(std::string("ZeroForm: ") + e.what() + " in '" + t + "'");
        }
    }
    return out;
}

RealStructure parse_structure(const std::string& s) {
    if (s == "standard") return RealStructure::Standard;
    if (s == "fpf") return RealStructure::FixedPointFree;
    throw ParseError("unknown structure '" + s + "' (expected standard|fpf)");
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        if (text.empty() || text.back() != '\n') out << "\n";
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw Error("cannot write output file " + out_path);
    f << text;
}

json one_or_array(std::vector<json> docs) {
    if (docs.size() == 1) return docs[0];
    return json(docs);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact rank, label, and region computations for real binary forms"};
    app.require_subcommand(1);

    std::string input, structure_flag = "standard", out_path, format = "json";
    std::string u_flag = "0", v_flag = "1", w_flag = "2", eps_flag;
    std::uint64_t seed = 0;
    long n = 1000, bound = 100;
    double threshold = 0.01;

    auto add_common = [&](CLI::App* cmd, bool with_form) {
        if (with_form)
            cmd->add_option("form", input, "form 'd:c0,...,cd' or @file with one form per line")
                ->required();
        cmd->add_option("--structure", structure_flag, "standard|fpf");
        cmd->add_option("--out", out_path, "write output to this path instead of stdout");
        cmd->add_option("--seed", seed, "seed for any sampled search");
    };

    auto* c_rank = app.add_subcommand("rank", "border/cactus/complex/admissible ranks");
    add_common(c_rank, true);
    auto* c_labels = app.add_subcommand("labels", "labels of minimal admissible decompositions");
    add_common(c_labels, true);
    auto* c_realrank = app.add_subcommand("realrank", "smallest totally real decomposition size");
    add_common(c_realrank, true);

    auto* c_sample = app.add_subcommand("sample", "Monte Carlo label-region statistics");
    c_sample->add_option("degree", input, "form degree to sample")->required();
    c_sample->add_option("--structure", structure_flag, "standard|fpf");
    c_sample->add_option("--out", out_path, "output path");
    c_sample->add_option("--seed", seed, "sampling seed");
    c_sample->add_option("--n", n, "number of samples");
    c_sample->add_option("--bound", bound, "coefficient box bound");
    c_sample->add_option("--threshold", threshold, "typicality frequency threshold");
    c_sample->add_option("--format", format, "json|csv");

    auto* c_boundary = app.add_subcommand("boundary", "admissible-rank-boundary witness tracks");
    c_boundary->add_option("degree", input, "odd curve degree r >= 5")->required();
    c_boundary->add_option("--u", u_flag, "curve parameter u");
    c_boundary->add_option("--v", v_flag, "curve parameter v");
    c_boundary->add_option("--w", w_flag, "curve parameter w (base point)");
    c_boundary->add_option("--eps", eps_flag, "comma-separated epsilon schedule");
    c_boundary->add_option("--out", out_path, "output path");

    auto* c_svg = app.add_subcommand("partition-svg", "SVG of the lambda-line label partition");
    add_common(c_svg, true);

    try {
        std::vector<const char*> argv;
        argv.push_back("admrank");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "admrank: " << e.what() << "\n";
        return 2;
    }

    try {
        RealStructure structure = parse_structure(structure_flag);

        if (c_rank->parsed() || c_labels->parsed()) {
            std::vector<json> docs;
            for (const auto& f : parse_inputs(input)) {
                RankProfile p = rank_profile(f);
                LabelSet ls = label_set(f, structure, seed);
                if (!ls.exact)
                    err << "admrank: label set of " << format_form(f)
                        << " is sampled, not exhaustive (deciding system has dim "
                        << ls.deciding_dim << ")\n";
                json doc = rank_document(f, p, ls);
                if (structure == RealStructure::Standard && ls.deciding_dim == 2) {
                    ApolarSystem sys = apolar_system(f, ls.rank);
                    doc["pencil_discriminant"] =
                        format_upoly(discriminant_in_lambda(sys.basis[0], sys.basis[1]));
                }
                docs.push_back(doc);
            }
            emit(one_or_array(docs).dump(2), out_path, out);
            return 0;
        }

        if (c_realrank->parsed()) {
            if (structure != RealStructure::Standard)
                throw Error("real rank is defined for the standard structure only");
            std::vector<json> docs;
            bool undecided = false;
            for (const auto& f : parse_inputs(input)) {
                RealRankResult rr = real_rank(f);
                json doc{{"input", format_form(f)},
                         {"degree", f.degree()},
                         {"exact", rr.exact()},
                         {"structure", structure_name(structure)}};
                if (rr.exact()) doc["real_rank"] = rr.lo;
                else {
                    doc["real_rank_interval"] = json::array({rr.lo, rr.hi});
                    undecided = true;
                }
                docs.push_back(doc);
            }
            emit(one_or_array(docs).dump(2), out_path, out);
            return undecided ? 4 : 0;
        }

        if (c_sample->parsed()) {
            int d;
            try {
                d = std::stoi(input);
            } catch (...) {
                throw ParseError("sample expects a degree, got '" + input + "'");
            }
            RegionReport rep = sample_labels(d, structure, n, seed, bound, threshold);
            if (format == "csv") emit(region_report_csv(rep), out_path, out);
            else if (format == "json") emit(to_json(rep).dump(2), out_path, out);
            else throw ParseError("unknown format '" + format + "'");
            return 0;
        }

        if (c_boundary->parsed()) {
            int r;
            try {
                r = std::stoi(input);
            } catch (...) {
                throw ParseError("boundary expects an odd degree, got '" + input + "'");
            }
            std::vector<Rat> eps;
            if (eps_flag.empty()) {
                Rat e(1, 10);
                for (int i = 0; i < 6; ++i) {
                    eps.push_back(e);
                    e /= 10;
                }
            } else {
                std::stringstream ss(eps_flag);
                std::string item;
                while (std::getline(ss, item, ',')) eps.push_back(parse_rational(item));
            }
            BoundarySequence seq =
                boundary_tracks(r, parse_rational(u_flag), parse_rational(v_flag),
                                parse_rational(w_flag), eps);
            emit(to_json(seq).dump(2), out_path, out);
            return 0;
        }

        if (c_svg->parsed()) {
            auto forms = parse_inputs(input);
            if (forms.size() != 1) throw ParseError("partition-svg takes a single form");
            emit(partition_svg(forms[0]), out_path, out);
            return 0;
        }
    } catch (const ParseError& e) {
        err << "admrank: parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "admrank: " << e.what() << "\n";
        return 3;
    }
    err << "admrank: no subcommand dispatched\n";
    return 2;
}

} // namespace admrank::cli
