#include "hlcd/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hlcd/errors.hpp"

namespace hlcd::io {

namespace {

using Json = nlohmann::ordered_json;

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

}  // namespace

CodeFile parse_code_file(std::string_view text) {
    std::vector<std::string> header;
    std::vector<F4Vector> rows;
    std::size_t line_no = 0;
    std::size_t n = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        const std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        std::size_t first = 0;
        while (first < line.size() && is_space(line[first])) ++first;
        if (first == line.size()) continue;
        if (line[first] == '#') {
            std::string_view rest = line.substr(first + 1);
            if (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
            while (!rest.empty() && rest.back() == '\r') rest.remove_suffix(1);
            header.emplace_back(rest);
            continue;
        }
        std::vector<Gf4> symbols;
        for (std::size_t c = first; c < line.size(); ++c) {
            if (is_space(line[c])) continue;
            Gf4 a;
            if (!Gf4::from_symbol(line[c], a)) {
                throw ParseError(std::string("invalid symbol '") + line[c] + "'", line_no, c + 1);
            }
            symbols.push_back(a);
        }
        if (rows.empty()) {
            n = symbols.size();
        } else if (symbols.size() != n) {
            throw ParseError("row has " + std::to_string(symbols.size()) + " symbols, expected " + std::to_string(n),
                             line_no, line.size() + 1);
        }
        rows.emplace_back(std::move(symbols));
    }
    if (rows.empty()) throw ParseError("no generator rows", line_no, 1);
    return {std::move(header), LinearCode(F4Matrix::from_rows(rows))};
}

LinearCode parse_code(std::string_view text) { return parse_code_file(text).code; }

std::string format_code_file(const LinearCode& code, const std::vector<std::string>& header) {
    std::string out;
    for (const std::string& h : header) out += "# " + h + "\n";
    const F4Matrix& g = code.generator();
    for (std::size_t r = 0; r < g.rows(); ++r) out += g.row_vector(r).to_string() + "\n";
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidArgument("cannot write '" + path + "'");
    out << contents;
    if (!out) throw InvalidArgument("write to '" + path + "' failed");
}

Format parse_format(std::string_view name) {
    if (name == "text") return Format::Text;
    if (name == "json") return Format::Json;
    throw InvalidArgument("unknown format '" + std::string(name) + "'");
}

std::string summary_json(const CodeSummary& s) {
    Json j;
    j["n"] = s.n;
    j["k"] = s.k;
    j["d"] = s.d ? Json(*s.d) : Json(nullptr);
    j["d_dual"] = s.d_dual ? Json(*s.d_dual) : Json(nullptr);
    j["hull_dim"] = s.hull_dim;
    j["is_lcd"] = s.is_lcd;
    j["is_even"] = s.is_even;
    j["d_exact"] = s.d_exact;
    j["d_dual_exact"] = s.d_dual_exact;
    return j.dump();
}

CodeSummary summary_from_json(std::string_view text) {
    try {
        const Json j = Json::parse(text);
        CodeSummary s;
        s.n = j.at("n").get<std::size_t>();
        s.k = j.at("k").get<std::size_t>();
        if (!j.at("d").is_null()) s.d = j.at("d").get<std::size_t>();
        if (!j.at("d_dual").is_null()) s.d_dual = j.at("d_dual").get<std::size_t>();
        s.hull_dim = j.at("hull_dim").get<std::size_t>();
        s.is_lcd = j.at("is_lcd").get<bool>();
        s.is_even = j.at("is_even").get<bool>();
        s.d_exact = j.value("d_exact", true);
        s.d_dual_exact = j.value("d_dual_exact", true);
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("summary JSON: ") + e.what(), 1, 1);
    }
}

std::string summary_text(const CodeSummary& s) {
    auto weight = [](const std::optional<std::size_t>& d, bool exact) {
        if (!d) return std::string("-");
        return exact ? std::to_string(*d) : "<= " + std::to_string(*d) + " (budget reached)";
    };
    std::ostringstream out;
    out << "[" << s.n << ", " << s.k << "] code over GF(4)\n";
    out << "d: " << weight(s.d, s.d_exact) << "\n";
    out << "d_dual: " << weight(s.d_dual, s.d_dual_exact) << "\n";
    out << "hull dimension: " << s.hull_dim << "\n";
    out << "LCD: " << (s.is_lcd ? "yes" : "no") << "\n";
    out << "even: " << (s.is_even ? "yes" : "no") << "\n";
    return out.str();
}

std::string emit_summary(const CodeSummary& s, Format format) {
    return format == Format::Json ? summary_json(s) + "\n" : summary_text(s);
}

std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace hlcd::io
