#include "core/wcnf.hh"

#include <charconv>
#include <fstream>
#include <sstream>

namespace topksat {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
    throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + msg);
}

struct Token {
    long long value;
    int line;
};

// Numeric tokens with the line each one appeared on.
std::vector<Token> tokenize(std::string_view text, int& header_line, long long header[3]) {
    std::vector<Token> tokens;
    bool have_header = false;
    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        ++line_no;
        pos = eol + 1;

        size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string_view::npos) {
            if (eol == text.size()) break;
            continue;
        }
        if (line[i] == 'c') {
            if (eol == text.size()) break;
            continue;
        }
        if (line[i] == 'p') {
            if (have_header) parse_fail(line_no, "duplicate header");
            std::istringstream hs{std::string(line.substr(i))};
            std::string p, fmt;
            if (!(hs >> p >> fmt >> header[0] >> header[1] >> header[2]) || p != "p" ||
                fmt != "wcnf" || header[0] < 0 || header[1] < 0 || header[2] < 1)
                parse_fail(line_no, "malformed header (expected `p wcnf <nvars> <nclauses> <top>`)");
            std::string extra;
            if (hs >> extra) parse_fail(line_no, "malformed header (trailing tokens)");
            have_header = true;
            header_line = line_no;
            if (eol == text.size()) break;
            continue;
        }
        while (i < line.size()) {
            size_t j = line.find_first_of(" \t\r", i);
            if (j == std::string_view::npos) j = line.size();
            std::string_view tok = line.substr(i, j - i);
            long long v = 0;
            auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc() || p != tok.data() + tok.size())
                parse_fail(line_no, "expected integer, got `" + std::string(tok) + "`");
            if (!have_header) parse_fail(line_no, "clause data before header");
            tokens.push_back({v, line_no});
            i = line.find_first_not_of(" \t\r", j);
            if (i == std::string_view::npos) break;
        }
        if (eol == text.size()) break;
    }
    if (!have_header) parse_fail(line_no == 0 ? 1 : line_no, "missing `p wcnf` header");
    return tokens;
}

} // namespace

Formula parse_wcnf(std::string_view text) {
    int header_line = 0;
    long long header[3] = {0, 0, 0};
    std::vector<Token> tokens = tokenize(text, header_line, header);

    const long long nvars = header[0];
    const long long nclauses = header[1];
    const long long top = header[2];
    Formula f(static_cast<int>(nvars));

    long long parsed = 0;
    size_t t = 0;
    while (t < tokens.size()) {
        const Token weight = tokens[t++];
        if (weight.value != top && weight.value != 1)
            parse_fail(weight.line, "weight " + std::to_string(weight.value) +
                                        " is neither 1 nor top (" + std::to_string(top) + ")");
        std::vector<Lit> lits;
        bool terminated = false;
        while (t < tokens.size()) {
            const Token tok = tokens[t++];
            if (tok.value == 0) {
                terminated = true;
                break;
            }
            if (tok.value > nvars || tok.value < -nvars)
                parse_fail(tok.line, "literal " + std::to_string(tok.value) +
                                         " exceeds declared variable count " +
                                         std::to_string(nvars));
            lits.push_back(static_cast<Lit>(tok.value));
        }
        if (!terminated) parse_fail(weight.line, "clause missing 0 terminator");
        ++parsed;
        if (weight.value == top)
            f.add_hard(std::move(lits));
        else
            f.add_soft(std::move(lits));
    }
    if (parsed != nclauses)
        parse_fail(header_line, "header declares " + std::to_string(nclauses) +
                                    " clauses but file contains " + std::to_string(parsed));
    return f;
}

Formula read_wcnf_file(const std::string& path) { return parse_wcnf(read_text_file(path)); }

std::string write_wcnf(const Formula& f) { return write_wcnf(f, {}); }

std::string write_wcnf(const Formula& f, const std::vector<std::string>& comments) {
    const long long top = static_cast<long long>(f.num_soft()) + 1;
    std::string out;
    for (const std::string& c : comments) {
        out += "c ";
        out += c;
        out += '\n';
    }
    out += "p wcnf " + std::to_string(f.num_vars()) + ' ' +
           std::to_string(f.num_hard() + f.num_soft()) + ' ' + std::to_string(top) + '\n';
    auto emit = [&out](long long weight, const Clause& c) {
        out += std::to_string(weight);
        for (Lit l : c.lits) {
            out += ' ';
            out += std::to_string(l);
        }
        out += " 0\n";
    };
    for (const Clause& c : f.hard()) emit(top, c);
    for (const Clause& c : f.soft()) emit(1, c);
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::Io, "cannot open " + path + " for writing");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw Error(ErrorCode::Io, "write failed for " + path);
}

} // namespace topksat
