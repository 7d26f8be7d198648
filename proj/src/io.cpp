#include "lascoux/io.hpp"

#include <json.hpp>
#include <sstream>

namespace lascoux {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

int parse_int(const std::string& s) {
    detail::require(!s.empty(), "expected an integer");
    size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("expected an integer, got '" + s + "'");
    }
    detail::require(pos == s.size(), "trailing characters after integer");
    return v;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    for (const auto& tok : split(trim(text), ',')) out.push_back(parse_int(trim(tok)));
    return out;
}

std::string join_ints(const std::vector<int>& v, const char* sep) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << sep;
        os << v[i];
    }
    return os.str();
}

} // namespace

std::string format_composition(const WeakComposition& a) { return join_ints(a.entries(), ","); }

WeakComposition parse_composition(const std::string& text) {
    return WeakComposition(parse_int_list(text));
}

std::string format_permutation(const Permutation& w) {
    if (w.is_identity()) return "1";
    return join_ints(w.one_line(), ",");
}

Permutation parse_permutation(const std::string& text) {
    std::string t = trim(text);
    detail::require(!t.empty(), "empty permutation");
    if (t.find(',') == std::string::npos && t.size() > 1) {
        // single-token digit string, support <= 9
        std::vector<int> v;
        for (char ch : t) {
            detail::require(ch >= '1' && ch <= '9', "one-line digit string must use 1-9");
            v.push_back(ch - '0');
        }
        return Permutation::from_one_line(std::move(v));
    }
    return Permutation::from_one_line(parse_int_list(t));
}

std::string format_word(const Word& w) {
    bool single_digits = true;
    for (int l : w.letters())
        if (l > 9) single_digits = false;
    if (single_digits && !w.empty()) {
        std::string s;
        for (int l : w.letters()) s.push_back(static_cast<char>('0' + l));
        return s;
    }
    return join_ints(w.letters(), ",");
}

Word parse_word(const std::string& text) {
    std::string t = trim(text);
    if (t.empty()) return Word{};
    if (t.find(',') == std::string::npos) {
        std::vector<int> v;
        for (char ch : t) {
            detail::require(ch >= '1' && ch <= '9', "word digit string must use 1-9");
            v.push_back(ch - '0');
        }
        return Word(std::move(v));
    }
    return Word(parse_int_list(t));
}

std::string format_increasing_tableau(const IncreasingTableau& t) {
    std::ostringstream os;
    for (int r = 1; r <= t.num_rows(); ++r) {
        if (r > 1) os << "\n";
        for (int c = 1; c <= t.row_length(r); ++c) {
            if (c > 1) os << " ";
            os << t.at(r, c);
        }
    }
    return os.str();
}

IncreasingTableau parse_increasing_tableau(const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        line = trim(line);
        if (line.empty()) continue;
        std::vector<int> row;
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) row.push_back(parse_int(tok));
        rows.push_back(std::move(row));
    }
    return IncreasingTableau(std::move(rows));
}

std::string format_rsvt(const RSVT& t) {
    std::ostringstream os;
    for (int r = 1; r <= t.num_rows(); ++r) {
        if (r > 1) os << "\n";
        for (int c = 1; c <= t.row_length(r); ++c) {
            if (c > 1) os << " ";
            const auto& cell = t.at(r, c).elements();
            // decreasing order, mirroring the display convention
            for (size_t i = cell.size(); i-- > 0;) {
                os << cell[i];
                if (i) os << ",";
            }
        }
    }
    return os.str();
}

RSVT parse_rsvt(const std::string& text) {
    std::vector<std::vector<FinSet>> rows;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        line = trim(line);
        if (line.empty()) continue;
        std::vector<FinSet> row;
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) row.emplace_back(parse_int_list(tok));
        rows.push_back(std::move(row));
    }
    return RSVT(std::move(rows));
}

std::string format_pair_file(const TableauPair& pair) {
    return format_increasing_tableau(pair.p) + "\n\n" + format_rsvt(pair.q) + "\n";
}

TableauPair parse_pair_file(const std::string& text) {
    // split at the first blank line
    std::istringstream is(text);
    std::string line, top, bottom;
    bool in_bottom = false;
    while (std::getline(is, line)) {
        if (!in_bottom && trim(line).empty() && !trim(top).empty()) {
            in_bottom = true;
            continue;
        }
        (in_bottom ? bottom : top) += line + "\n";
    }
    detail::require(in_bottom, "pair file: expected a blank line between the tableaux");
    return TableauPair(parse_increasing_tableau(top), parse_rsvt(bottom));
}

std::string format_polynomial(const LPolynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        if (!first) os << " + ";
        first = false;
        bool has_factor = false;
        if (c != 1) {
            os << c;
            has_factor = true;
        }
        if (m.beta > 0) {
            if (has_factor) os << " ";
            os << "b";
            if (m.beta > 1) os << "^" << m.beta;
            has_factor = true;
        }
        for (size_t i = 0; i < m.exp.size(); ++i) {
            if (m.exp[i] == 0) continue;
            if (has_factor) os << " ";
            os << "x" << (i + 1);
            if (m.exp[i] > 1) os << "^" << m.exp[i];
            has_factor = true;
        }
        if (!has_factor) os << "1";
    }
    return os.str();
}

LPolynomial parse_polynomial(const std::string& text, int n) {
    LPolynomial out(n);
    std::string t = trim(text);
    if (t == "0") return out;
    for (const auto& term : split(t, '+')) {
        std::string tt = trim(term);
        detail::require(!tt.empty(), "polynomial: empty term");
        Int coeff = 1;
        int beta = 0;
        std::vector<int> exp(static_cast<size_t>(n), 0);
        std::istringstream ts(tt);
        std::string tok;
        bool saw_factor = false;
        while (ts >> tok) {
            if (tok[0] == 'b') {
                beta = tok.size() > 1 ? parse_int(tok.substr(2)) : 1;
                detail::require(tok.size() == 1 || tok[1] == '^', "polynomial: bad beta token");
            } else if (tok[0] == 'x') {
                auto caret = tok.find('^');
                int idx = parse_int(tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
                detail::require(idx >= 1 && idx <= n, "polynomial: variable index out of range");
                int e = caret == std::string::npos ? 1 : parse_int(tok.substr(caret + 1));
                exp[static_cast<size_t>(idx) - 1] += e;
            } else {
                detail::require(!saw_factor, "polynomial: coefficient after factors");
                coeff = Int(tok);
            }
            saw_factor = true;
        }
        out.add_term(Monomial{beta, std::move(exp)}, coeff);
    }
    return out;
}

std::string format_expansion(const ExpansionResult& r) {
    // one line per (beta power, gamma), sorted by (power, gamma lex)
    std::vector<std::tuple<int, std::vector<int>, Int>> lines;
    for (const auto& [gamma, coeffs] : r.terms())
        for (size_t k = 0; k < coeffs.size(); ++k)
            if (coeffs[k] != 0) lines.emplace_back(static_cast<int>(k), gamma, coeffs[k]);
    std::sort(lines.begin(), lines.end());
    std::ostringstream os;
    for (const auto& [k, gamma, c] : lines) {
        if (k == 1) os << "b ";
        else if (k > 1) os << "b^" << k << " ";
        os << "L_(" << join_ints(gamma, ",") << ") : " << c << "\n";
    }
    return os.str();
}

std::string format_expansion_json(const ExpansionResult& r) {
    nlohmann::json obj = nlohmann::json::object();
    for (const auto& [gamma, coeffs] : r.terms()) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : coeffs) arr.push_back(c.str());
        obj[join_ints(gamma, ",")] = arr;
    }
    return obj.dump(2);
}

ExpansionResult parse_expansion_json(const std::string& text, int n) {
    nlohmann::json obj = nlohmann::json::parse(text);
    detail::require(obj.is_object(), "expansion json: expected an object");
    ExpansionResult out(n);
    for (const auto& [key, arr] : obj.items()) {
        WeakComposition gamma(parse_int_list(key));
        detail::require(arr.is_array(), "expansion json: expected coefficient arrays");
        for (size_t k = 0; k < arr.size(); ++k) {
            Int c = arr[k].is_string() ? Int(arr[k].get<std::string>()) : Int(arr[k].get<long long>());
            out.add(gamma, static_cast<int>(k), c);
        }
    }
    return out;
}

} // namespace lascoux
