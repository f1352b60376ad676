#ifndef NCSYLV_REPORT_HPP
#define NCSYLV_REPORT_HPP

// Text and JSON forms of VerifyReport. JSON keys come out in a fixed order so
// that parse followed by dump reproduces the input byte for byte.

#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "sylvester.hpp"

namespace ncsylv {

using ordered_json = nlohmann::ordered_json;

inline Verdict parse_verdict(const std::string& s) {
    for (Verdict v : {Verdict::in_ideal, Verdict::probably_in_ideal, Verdict::not_in_ideal})
        if (verdict_name(v) == s) return v;
    throw std::invalid_argument("unknown verdict: " + s);
}

inline ordered_json to_json(const DegreeReport& d) {
    ordered_json j;
    j["degree"] = d.degree;
    j["block_count"] = d.block_count;
    j["verdict"] = verdict_name(d.verdict);
    if (d.trials_disagreed) j["trials_disagreed"] = true;
    if (!d.witness.empty()) {
        ordered_json w = ordered_json::array();
        for (const auto& [word, coef] : d.witness) w.push_back({{"word", word.to_string()}, {"coefficient", coef}});
        j["witness"] = std::move(w);
    }
    return j;
}

inline ordered_json to_json(const VerifyReport& r) {
    ordered_json j;
    j["identity"] = r.identity;
    j["regime"] = r.regime;
    j["m"] = r.m;
    j["n"] = r.n;
    j["max_degree"] = r.max_degree;
    j["method"] = r.method;
    j["seed"] = r.seed;
    j["degrees"] = ordered_json::array();
    for (const auto& d : r.degrees) j["degrees"].push_back(to_json(d));
    j["elapsed_ms"] = r.elapsed_ms;
    j["pass"] = r.pass;
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

inline DegreeReport degree_report_from_json(const ordered_json& j) {
    DegreeReport d;
    d.degree = j.at("degree").get<int>();
    d.block_count = j.at("block_count").get<std::size_t>();
    d.verdict = parse_verdict(j.at("verdict").get<std::string>());
    d.trials_disagreed = j.value("trials_disagreed", false);
    if (j.contains("witness"))
        for (const auto& w : j.at("witness"))
            d.witness.emplace_back(Word::parse(w.at("word").get<std::string>()), w.at("coefficient").get<std::string>());
    return d;
}

inline VerifyReport report_from_json(const ordered_json& j) {
    VerifyReport r;
    r.identity = j.at("identity").get<std::string>();
    r.regime = j.at("regime").get<std::string>();
    r.m = j.at("m").get<int>();
    r.n = j.at("n").get<int>();
    r.max_degree = j.at("max_degree").get<int>();
    r.method = j.at("method").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& d : j.at("degrees")) r.degrees.push_back(degree_report_from_json(d));
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    r.pass = j.at("pass").get<bool>();
    if (j.contains("notes")) r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
}

/// "c * w", parenthesizing c when it has more than one term.
inline std::string witness_term(const Word& w, const std::string& c) {
    bool compound = c.find(" + ") != std::string::npos || c.find(" - ") != std::string::npos;
    return (compound ? "(" + c + ")" : c) + " * " + w.to_string();
}

inline std::string to_text(const VerifyReport& r) {
    std::ostringstream os;
    os << r.identity << "  regime=" << r.regime << " m=" << r.m << " n=" << r.n << " N=" << r.max_degree
       << " method=" << r.method << " seed=" << r.seed << "\n";
    for (const auto& d : r.degrees) {
        os << "  degree " << d.degree << ": " << verdict_name(d.verdict) << " (" << d.block_count << " blocks)";
        if (d.trials_disagreed) os << " [trials disagreed]";
        os << "\n";
        for (const auto& [w, c] : d.witness) os << "    witness " << witness_term(w, c) << "\n";
    }
    for (const auto& note : r.notes) os << "  note: " << note << "\n";
    os << "  " << (r.pass ? "PASS" : "FAIL") << " in " << std::fixed << std::setprecision(1) << r.elapsed_ms << " ms\n";
    return os.str();
}

}  // namespace ncsylv

#endif  // NCSYLV_REPORT_HPP
