#include "minorkit/parse.hpp"

#include <cctype>
#include <string_view>

namespace minorkit {

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct Cursor {
    std::string_view s;
    size_t i = 0;
    size_t line = 1;
    size_t colbase = 1; // column of s[0] in the original text

    ParsePos pos() const { return ParsePos{line, colbase + i}; }
    void skip_ws() {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    void next() { ++i; }

    mpz_class read_uint() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw ParseError(pos(), "expected a number");
        return mpz_class(std::string(s.substr(start, i - start)), 10);
    }

    std::string read_name() {
        skip_ws();
        size_t start = i;
        if (i >= s.size() || !is_name_start(s[i])) throw ParseError(pos(), "expected a name");
        while (i < s.size() && is_name_char(s[i])) ++i;
        return std::string(s.substr(start, i - start));
    }
};

// signed sum of terms; term = [coef] ['*' var['^'k]]* with the coefficient first
Polynomial parse_sum(const RingPtr& ring, std::string_view text, size_t line, size_t colbase) {
    Cursor c{text, 0, line, colbase};
    std::vector<Term> terms;
    bool first = true;
    if (c.done()) throw ParseError(c.pos(), "empty expression");
    while (!c.done()) {
        int sign = 1;
        char ch = c.peek();
        if (ch == '+' || ch == '-') {
            sign = ch == '-' ? -1 : 1;
            c.next();
        } else if (!first) {
            throw ParseError(c.pos(), "expected '+' or '-' between terms");
        }
        if (c.done()) throw ParseError(c.pos(), "dangling sign");
        first = false;

        FieldElem coef = FieldElem::one(ring->field());
        bool saw_coef = false;
        ch = c.peek();
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            ParsePos numpos = c.pos();
            mpz_class num = c.read_uint();
            mpz_class den = 1;
            if (c.peek() == '/') {
                c.next();
                den = c.read_uint();
                if (den == 0) throw ParseError(numpos, "zero denominator");
            }
            coef = FieldElem::from_fraction(ring->field(), num, den);
            saw_coef = true;
        }
        if (sign < 0) coef = -coef;

        Monomial m(ring->nvars());
        bool saw_var = false;
        for (;;) {
            char n = c.peek();
            if (saw_coef || saw_var) {
                if (n != '*') break;
                c.next();
            } else if (!is_name_start(n)) {
                break;
            }
            ParsePos vpos = c.pos();
            std::string name = c.read_name();
            auto idx = ring->var_index(name);
            if (!idx) throw ParseError(vpos, "unknown variable '" + name + "'");
            uint16_t k = 1;
            if (c.peek() == '^') {
                c.next();
                mpz_class e = c.read_uint();
                if (e > 1000) throw ParseError(vpos, "exponent too large");
                k = static_cast<uint16_t>(e.get_ui());
            }
            m = m * Monomial::variable(ring->nvars(), *idx, k);
            saw_var = true;
        }
        if (!saw_coef && !saw_var) throw ParseError(c.pos(), "expected a term");
        terms.push_back(Term{std::move(coef), std::move(m)});
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

} // namespace

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
    return parse_sum(ring, text, 1, 1);
}

Polynomial parse_linear_form(const RingPtr& ring, const std::string& text) {
    Polynomial p = parse_sum(ring, text, 1, 1);
    if (!p.is_linear_form())
        throw Error(ErrorKind::nonlinear_entry, "not a linear form: " + text);
    return p;
}

LinMatrix parse_matrix_text(const std::string& text, std::optional<Field> cli_field,
                            MonomialOrder order) {
    // split into lines, keeping 1-based numbering
    std::vector<std::pair<size_t, std::string>> lines;
    {
        size_t lineno = 1, start = 0;
        for (size_t i = 0; i <= text.size(); ++i) {
            if (i == text.size() || text[i] == '\n') {
                lines.emplace_back(lineno++, text.substr(start, i - start));
                start = i + 1;
            }
        }
    }

    std::optional<std::vector<std::string>> var_names;
    std::optional<Field> file_field;
    size_t vars_line = 0;
    std::vector<std::pair<size_t, std::string>> rows;

    for (auto& [no, raw] : lines) {
        Cursor c{raw, 0, no, 1};
        if (c.done()) continue;
        if (rows.empty() && is_name_start(c.peek())) {
            size_t save = c.i;
            std::string head = c.read_name();
            if (c.peek() == ':' && (head == "vars" || head == "field")) {
                c.next();
                if (head == "vars") {
                    if (var_names) throw ParseError(c.pos(), "duplicate vars: line");
                    std::vector<std::string> names;
                    while (!c.done()) names.push_back(c.read_name());
                    if (names.empty()) throw ParseError(c.pos(), "vars: needs at least one name");
                    var_names = std::move(names);
                    vars_line = no;
                } else {
                    if (file_field) throw ParseError(c.pos(), "duplicate field: line");
                    ParsePos p = c.pos();
                    mpz_class v = c.read_uint();
                    if (!c.done()) throw ParseError(c.pos(), "trailing text after field:");
                    try {
                        file_field = Field::prime(v.get_ui());
                    } catch (const Error& e) {
                        throw ParseError(p, e.what());
                    }
                }
                continue;
            }
            c.i = save; // a row that happens to start with a name
        }
        rows.emplace_back(no, raw);
    }

    if (!var_names) throw ParseError(ParsePos{1, 1}, "missing vars: line");
    if (rows.size() != 2)
        throw ParseError(ParsePos{rows.empty() ? vars_line : rows.back().first, 1},
                         "expected exactly two matrix rows, got " + std::to_string(rows.size()));

    Field field = Field::rationals();
    if (file_field && cli_field && !(*file_field == *cli_field))
        fail(ErrorKind::degenerate_input,
             "field: header disagrees with the requested characteristic");
    if (file_field) field = *file_field;
    else if (cli_field) field = *cli_field;

    RingPtr ring;
    try {
        ring = Ring::make(*var_names, field, order);
    } catch (const Error& e) {
        throw ParseError(ParsePos{vars_line, 1}, e.what());
    }

    std::vector<std::vector<Polynomial>> parsed(2);
    for (int r = 0; r < 2; ++r) {
        auto& [no, raw] = rows[static_cast<size_t>(r)];
        size_t start = 0;
        std::vector<std::pair<size_t, std::string>> segs; // (colbase, text)
        for (size_t i = 0; i <= raw.size(); ++i) {
            if (i == raw.size() || raw[i] == ';') {
                segs.emplace_back(start + 1, raw.substr(start, i - start));
                start = i + 1;
            }
        }
        // a trailing ';' leaves one empty final segment
        while (!segs.empty() &&
               segs.back().second.find_first_not_of(" \t") == std::string::npos)
            segs.pop_back();
        if (segs.empty()) throw ParseError(ParsePos{no, 1}, "empty matrix row");
        for (auto& [colbase, seg] : segs) {
            Polynomial p = parse_sum(ring, seg, no, colbase);
            if (!p.is_linear_form())
                throw Error(ErrorKind::nonlinear_entry,
                            "line " + std::to_string(no) + ", col " + std::to_string(colbase) +
                                ": matrix entry is not a linear form");
            parsed[static_cast<size_t>(r)].push_back(std::move(p));
        }
    }
    if (parsed[0].size() != parsed[1].size())
        throw ParseError(ParsePos{rows[1].first, 1},
                         "rows have different lengths (" + std::to_string(parsed[0].size()) +
                             " vs " + std::to_string(parsed[1].size()) + ")");

    std::vector<std::array<Polynomial, 2>> cols;
    for (size_t j = 0; j < parsed[0].size(); ++j)
        cols.push_back({parsed[0][j], parsed[1][j]});
    return LinMatrix(ring, std::move(cols), 1);
}

} // namespace minorkit
