#include "admrank/errors.hpp"
#include "admrank/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace admrank {

using nlohmann::json;

std::string structure_name(RealStructure s) {
    return s == RealStructure::Standard ? "standard" : "fpf";
}

json to_json(const Label& l) { return json{{"a", l.a}, {"b", l.b}, {"weight", l.weight()}}; }

json to_json(const LabelWitness& w) {
    json out = json::object();
    if (w.lambda_infinity) out["lambda"] = "inf";
    else if (w.lambda) out["lambda"] = format_rational(*w.lambda);
    if (w.form) out["form"] = format_form(*w.form);
    if (w.gaussian) {
        out["form_re"] = format_form(w.gaussian->first);
        out["form_im"] = format_form(w.gaussian->second);
    }
    return out;
}

json to_json(const LabelSet& ls) {
    json labels = json::array();
    for (const auto& [l, w] : ls.labels) {
        json e = to_json(l);
        e["witness"] = to_json(w);
        labels.push_back(e);
    }
    return json{{"rank", ls.rank},
                {"structure", structure_name(ls.structure)},
                {"exact", ls.exact},
                {"deciding_dim", ls.deciding_dim},
                {"labels", labels}};
}

json to_json(const SchemeLabel& sl) {
    return json{{"a", sl.a}, {"b", sl.b}, {"parts", sl.parts}};
}

json rank_document(const BinaryForm& f, const RankProfile& p, const LabelSet& ls) {
    json labels = json::array();
    for (const auto& [l, w] : ls.labels) {
        json e = json{{"a", l.a}, {"b", l.b}};
        e["witness"] = to_json(w);
        labels.push_back(e);
    }
    json out{{"input", format_form(f)},
             {"degree", p.degree},
             {"border_rank", p.border_rank},
             {"cactus_rank", p.cactus_rank},
             {"complex_rank", p.complex_rank},
             {"admissible_rank", ls.rank},
             {"generic_rank", p.generic_rank},
             {"rho", p.rho},
             {"certificate", format_form(p.certificate)},
             {"labels", labels},
             {"exact", ls.exact},
             {"structure", structure_name(ls.structure)}};
    out["scheme_label"] = p.scheme_label ? to_json(*p.scheme_label) : json(nullptr);
    return out;
}

json to_json(const RegionReport& rep) {
    json sets = json::array();
    for (const auto& [key, stat] : rep.set_counts) {
        json e{{"key", key},
               {"count", stat.count},
               {"frequency", static_cast<double>(stat.count) / static_cast<double>(rep.n_samples)}};
        if (stat.representative) e["representative"] = format_form(*stat.representative);
        sets.push_back(e);
    }
    json labels = json::array();
    for (const auto& [key, c] : rep.label_counts)
        labels.push_back(json{{"label", key},
                              {"count", c},
                              {"frequency", static_cast<double>(c) / static_cast<double>(rep.n_samples)}});
    json typical = json::array();
    for (const auto& l : rep.empirical_typical) typical.push_back(l.str());
    return json{{"degree", rep.degree},
                {"structure", structure_name(rep.structure)},
                {"n_samples", rep.n_samples},
                {"seed", rep.seed},
                {"coeff_bound", rep.coeff_bound},
                {"threshold", rep.threshold},
                {"degenerate_count", rep.degenerate_count},
                {"label_sets", sets},
                {"labels", labels},
                {"empirical_typical", typical}};
}

json to_json(const BoundarySequence& seq) {
    json steps = json::array();
    for (const auto& s : seq.steps) {
        steps.push_back(json{{"epsilon", format_rational(s.epsilon)},
                             {"conj_track", format_form(s.conj_track)},
                             {"real_track", format_form(s.real_track)},
                             {"conj_labels", to_json(s.conj_labels)},
                             {"real_labels", to_json(s.real_labels)},
                             {"conj_distance", format_rational(s.conj_distance)},
                             {"real_distance", format_rational(s.real_distance)}});
    }
    return json{{"r", seq.r},
                {"u", format_rational(seq.u)},
                {"v", format_rational(seq.v)},
                {"w", format_rational(seq.w)},
                {"base", format_form(seq.base)},
                {"limit", format_form(seq.limit)},
                {"limit_border_rank", seq.limit_border_rank},
                {"limit_minimal_apolar_squarefree", seq.limit_minimal_apolar_squarefree},
                {"steps", steps}};
}

std::string format_upoly(const UPoly& p) {
    if (p.is_zero()) return "0:0";
    std::string out = std::to_string(p.degree()) + ":";
    for (int i = p.degree(); i >= 0; --i) {
        if (i < p.degree()) out += ",";
        out += p.coeff(i).get_str();
    }
    return out;
}

UPoly parse_upoly(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError("expected 'k:c0,...,ck': " + text);
    int degree;
    try {
        degree = std::stoi(text.substr(0, colon));
    } catch (...) {
        throw ParseError("bad degree in polynomial literal: " + text);
    }
    std::vector<Int> c;
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
        Rat r = parse_rational(item);
        if (r.get_den() != 1) throw ParseError("polynomial coefficients must be integers");
        c.push_back(Int(r.get_num()));
    }
    if (c.size() != static_cast<size_t>(degree) + 1)
        throw ParseError("coefficient count does not match degree in: " + text);
    std::reverse(c.begin(), c.end());
    return UPoly(c);
}

std::string region_report_csv(const RegionReport& rep) {
    std::ostringstream out;
    out << "key,count,frequency\n";
    for (const auto& [key, stat] : rep.set_counts) {
        out << '"' << key << '"' << ',' << stat.count << ','
            << static_cast<double>(stat.count) / static_cast<double>(rep.n_samples) << "\n";
    }
    return out.str();
}

} // namespace admrank
