#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "absaf/io.hpp"

namespace absaf {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::string strip_comment(const std::string& line) {
    auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

ArgSet parse_label_list(const AF& af, const std::string& list, std::size_t line) {
    ArgSet s(af.size());
    std::stringstream items(list);
    std::string item;
    while (std::getline(items, item, ',')) {
        auto label = trim(item);
        if (label.empty()) throw ParseError(line, "empty label in list");
        auto id = af.find(label);
        if (!id) throw ParseError(line, "unknown argument '" + label + "'");
        s.set(*id);
    }
    return s;
}

}  // namespace

std::vector<Ballot> parse_ballots_text(const AF& af, std::string_view text) {
    std::vector<Ballot> out;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        auto l = trim(strip_comment(raw));
        if (l.empty()) continue;
        auto colon = l.find(':');
        if (colon == std::string::npos) throw ParseError(line, "expected '<count> : <labels>'");
        auto count_text = trim(l.substr(0, colon));
        if (count_text.empty() || !std::all_of(count_text.begin(), count_text.end(),
                                               [](unsigned char c) { return std::isdigit(c); }))
            throw ParseError(line, "multiplicity must be a positive integer");
        auto count = std::stoul(count_text);
        if (count == 0) throw ParseError(line, "multiplicity must be a positive integer");
        auto approved = parse_label_list(af, l.substr(colon + 1), line);
        if (approved.empty()) throw ParseError(line, "empty ballot");
        out.push_back({std::move(approved), count});
    }
    return out;
}

std::vector<Ballot> parse_ballots_json(const AF& af, std::string_view text) {
    auto doc = nlohmann::json::parse(text);
    std::vector<Ballot> out;
    std::size_t index = 0;
    for (const auto& entry : doc.at("ballots")) {
        ++index;
        auto count = entry.value("count", std::size_t{1});
        if (count == 0) throw ValidationError("ballot " + std::to_string(index) + " has count 0");
        ArgSet approved(af.size());
        for (const auto& label : entry.at("approved")) approved.set(af.id(label.get<std::string>()));
        if (approved.empty()) throw ValidationError("ballot " + std::to_string(index) + " approves no argument");
        out.push_back({std::move(approved), count});
    }
    return out;
}

std::vector<Ballot> load_ballots(const AF& af, const std::string& path) {
    auto text = read_file(path);
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") return parse_ballots_json(af, text);
    return parse_ballots_text(af, text);
}

std::string write_ballots_json(const ABSAF& s) {
    nlohmann::json doc;
    doc["ballots"] = nlohmann::json::array();
    for (const auto& b : s.ballots())
        doc["ballots"].push_back({{"count", b.multiplicity}, {"approved", s.af().labels_of(b.approved)}});
    return doc.dump(2) + "\n";
}

std::string write_ballots_text(const ABSAF& s) {
    std::string out;
    for (const auto& b : s.ballots()) {
        out += std::to_string(b.multiplicity) + " : ";
        auto labels = s.af().labels_of(b.approved);
        for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? "," : "") + labels[i];
        out += "\n";
    }
    return out;
}

Outcome parse_outcome(const AF& af, std::string_view text, const std::vector<ArgSet>& preferred) {
    Outcome out;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        auto l = trim(strip_comment(raw));
        if (l.empty()) continue;
        auto pi = parse_label_list(af, l, line);
        if (!preferred.empty() && std::find(preferred.begin(), preferred.end(), pi) == preferred.end())
            throw ParseError(line, "viewpoint is not a preferred extension");
        if (std::find(out.viewpoints.begin(), out.viewpoints.end(), pi) != out.viewpoints.end())
            throw ParseError(line, "duplicate viewpoint");
        out.viewpoints.push_back(std::move(pi));
    }
    out.k = out.viewpoints.size();
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace absaf
