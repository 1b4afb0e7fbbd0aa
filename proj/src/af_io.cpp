#include <cctype>
#include <fstream>
#include <sstream>

#include "absaf/af.hpp"

namespace absaf {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

class ApxScanner {
public:
    explicit ApxScanner(std::string_view text) : text_(text) {}

    void skip_blank() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                if (c == '\n') ++line_;
                ++pos_;
            } else {
                break;
            }
        }
    }

    bool done() {
        skip_blank();
        return pos_ >= text_.size();
    }

    std::string word() {
        skip_blank();
        std::size_t b = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(b, pos_ - b));
    }

    void expect(char c) {
        skip_blank();
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw ParseError(line_, std::string("expected '") + c + "'");
        ++pos_;
    }

    // Reads up to (not including) one of the stop characters.
    std::string label(std::string_view stops) {
        skip_blank();
        std::size_t b = pos_;
        while (pos_ < text_.size() && stops.find(text_[pos_]) == std::string_view::npos) {
            if (text_[pos_] == '\n') throw ParseError(line_, "unterminated argument label");
            ++pos_;
        }
        auto l = trim(text_.substr(b, pos_ - b));
        if (l.empty()) throw ParseError(line_, "empty argument label");
        return l;
    }

    std::size_t line() const { return line_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
};

AF parse_apx(std::string_view text) {
    ApxScanner scan(text);
    std::vector<std::string> labels;
    std::unordered_map<std::string, ArgId> index;
    std::vector<std::pair<ArgId, ArgId>> attacks;

    while (!scan.done()) {
        auto kind = scan.word();
        auto line = scan.line();
        if (kind == "arg") {
            scan.expect('(');
            auto l = scan.label(")");
            scan.expect(')');
            scan.expect('.');
            if (!index.emplace(l, labels.size()).second)
                throw ParseError(line, "duplicate argument '" + l + "'");
            labels.push_back(l);
        } else if (kind == "att") {
            scan.expect('(');
            auto from = scan.label(",");
            scan.expect(',');
            auto to = scan.label(")");
            scan.expect(')');
            scan.expect('.');
            auto f = index.find(from);
            auto t = index.find(to);
            if (f == index.end()) throw ParseError(line, "attack on undeclared argument '" + from + "'");
            if (t == index.end()) throw ParseError(line, "attack on undeclared argument '" + to + "'");
            for (auto [a, b] : attacks)
                if (a == f->second && b == t->second)
                    throw ParseError(line, "duplicate attack (" + from + "," + to + ")");
            attacks.emplace_back(f->second, t->second);
        } else {
            throw ParseError(line, "expected 'arg' or 'att'");
        }
    }
    return AF(std::move(labels), std::move(attacks));
}

AF parse_tgf(std::string_view text) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, ArgId> by_token;
    std::unordered_map<std::string, ArgId> by_label;
    std::vector<std::pair<ArgId, ArgId>> attacks;
    bool edges = false;

    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        auto l = trim(raw);
        if (l.empty()) continue;
        if (l == "#") {
            if (edges) throw ParseError(line, "second '#' separator");
            edges = true;
            continue;
        }
        std::istringstream fields(l);
        std::string first;
        fields >> first;
        if (!edges) {
            std::string rest;
            std::getline(fields, rest);
            auto label = trim(rest);
            if (label.empty()) label = first;
            if (by_token.count(first)) throw ParseError(line, "duplicate vertex '" + first + "'");
            if (!by_label.emplace(label, labels.size()).second)
                throw ParseError(line, "duplicate argument '" + label + "'");
            by_token.emplace(first, labels.size());
            labels.push_back(label);
        } else {
            std::string second, extra;
            if (!(fields >> second)) throw ParseError(line, "edge line needs two vertices");
            if (fields >> extra) throw ParseError(line, "trailing tokens on edge line");
            auto f = by_token.find(first);
            auto t = by_token.find(second);
            if (f == by_token.end()) throw ParseError(line, "attack on undeclared argument '" + first + "'");
            if (t == by_token.end()) throw ParseError(line, "attack on undeclared argument '" + second + "'");
            for (auto [a, b] : attacks)
                if (a == f->second && b == t->second)
                    throw ParseError(line, "duplicate attack (" + first + "," + second + ")");
            attacks.emplace_back(f->second, t->second);
        }
    }
    return AF(std::move(labels), std::move(attacks));
}

}  // namespace

AF parse_af(std::string_view text, AfFormat format) {
    return format == AfFormat::apx ? parse_apx(text) : parse_tgf(text);
}

AF load_af(const std::string& path, std::optional<AfFormat> format) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    if (!format) {
        auto dot = path.rfind('.');
        format = (dot != std::string::npos && path.substr(dot) == ".tgf") ? AfFormat::tgf : AfFormat::apx;
    }
    return parse_af(buf.str(), *format);
}

std::string write_apx(const AF& af) {
    std::string out;
    for (const auto& l : af.labels()) out += "arg(" + l + ").\n";
    for (auto [a, b] : af.attacks()) out += "att(" + af.label(a) + "," + af.label(b) + ").\n";
    return out;
}

}  // namespace absaf
