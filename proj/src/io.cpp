#include "jcd/io.hpp"

#include <cctype>
#include <vector>

namespace jcd {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            parts.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return parts;
}

long long parse_integer(std::string_view text, const char* what) {
    std::string_view t = text;
    bool any = false;
    std::size_t i = 0;
    if (i < t.size() && t[i] == '-')
        ++i;
    for (; i < t.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(t[i])))
            throw parse_error(std::string(what) + ": invalid integer '" +
                              std::string(text) + "'");
        any = true;
    }
    if (!any)
        throw parse_error(std::string(what) + ": invalid integer '" +
                          std::string(text) + "'");
    try {
        return std::stoll(std::string(t));
    } catch (const std::exception&) {
        throw parse_error(std::string(what) + ": integer out of range '" +
                          std::string(text) + "'");
    }
}

} // namespace

Rational parse_rational(std::string_view text) { return Rational::parse(text); }

std::string format_rational(const Rational& r) { return r.to_string(); }

Polynomial parse_polynomial(std::string_view text) {
    std::string_view body = trim(text);
    if (body.empty())
        throw parse_error("polynomial: empty input");
    std::vector<Rational> coeffs;
    for (std::string_view item : split(body, ',')) {
        std::string_view tok = trim(item);
        if (tok.empty())
            throw parse_error("polynomial: empty coefficient");
        coeffs.push_back(Rational::parse(tok));
    }
    return Polynomial(std::move(coeffs));
}

std::string format_polynomial(const Polynomial& p) {
    if (p.is_zero())
        return "0";
    std::string out;
    auto coeffs = p.coefficients();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i)
            out += ", ";
        out += coeffs[i].to_string();
    }
    return out;
}

namespace {

// Recursive-descent reader over the bracketed matrix grammar.
struct MatrixReader {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    bool consume(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!consume(c))
            throw parse_error(std::string("matrix: expected '") + c + "' at offset " +
                              std::to_string(pos));
    }
    Rational entry() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '-' ||
                s[pos] == '/'))
            ++pos;
        if (pos == start)
            throw parse_error("matrix: expected a rational entry at offset " +
                              std::to_string(pos));
        return Rational::parse(s.substr(start, pos - start));
    }
    std::vector<Rational> row() {
        expect('[');
        std::vector<Rational> r;
        r.push_back(entry());
        while (consume(','))
            r.push_back(entry());
        expect(']');
        return r;
    }
};

} // namespace

SquareMatrix parse_matrix(std::string_view text) {
    MatrixReader rd{text};
    rd.expect('[');
    std::vector<std::vector<Rational>> rows;
    rows.push_back(rd.row());
    while (rd.consume(','))
        rows.push_back(rd.row());
    rd.expect(']');
    rd.skip_ws();
    if (rd.pos != text.size())
        throw parse_error("matrix: trailing characters after closing bracket");
    std::size_t n = rows.size();
    for (const auto& r : rows)
        if (r.size() != n)
            throw parse_error("matrix: expected " + std::to_string(n) + "x" +
                              std::to_string(n) + " entries, found a row of length " +
                              std::to_string(r.size()));
    return SquareMatrix::from_rows(rows);
}

std::string format_matrix(const SquareMatrix& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.dim(); ++i) {
        if (i)
            out += ", ";
        out += '[';
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (j)
                out += ", ";
            out += m.at(i, j).to_string();
        }
        out += ']';
    }
    out += ']';
    return out;
}

namespace {

std::string format_term(const Rational& c, int deg, char variable) {
    std::string out;
    if (deg == 0)
        return c.to_string();
    Rational a = c.abs();
    if (c.sign() < 0)
        out += '-';
    if (a != Rational(1)) {
        out += a.to_string();
        out += '*';
    }
    out += variable;
    if (deg > 1) {
        out += '^';
        out += std::to_string(deg);
    }
    return out;
}

std::string format_poly_symbolic(const Polynomial& p, char variable) {
    if (p.is_zero())
        return "0";
    std::string out;
    auto coeffs = p.coefficients();
    bool first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero())
            continue;
        if (first) {
            out += format_term(coeffs[i], static_cast<int>(i), variable);
            first = false;
        } else {
            out += coeffs[i].sign() > 0 ? " + " : " - ";
            out += format_term(coeffs[i].abs(), static_cast<int>(i), variable);
        }
    }
    return out;
}

} // namespace

std::string format_poly_matrix(const PolyMatrix& m, char variable) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.dim(); ++i) {
        if (i)
            out += ", ";
        out += '[';
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (j)
                out += ", ";
            out += format_poly_symbolic(m.at(i, j), variable);
        }
        out += ']';
    }
    out += ']';
    return out;
}

std::string format_report(const VerificationReport& report) {
    auto line = [](const char* key, bool ok) {
        return std::string("verification.") + key + " = " + (ok ? "pass" : "fail") + "\n";
    };
    std::string out;
    out += line("sum", report.sum);
    out += line("commutation", report.commutation);
    out += line("nilpotency", report.nilpotency);
    if (report.nilpotency_index)
        out += "verification.nilpotency_index = " +
               std::to_string(*report.nilpotency_index) + "\n";
    out += line("separability", report.separability);
    out += line("certificate", report.certificate);
    out += line("overall", report.pass());
    return out;
}

std::string format_document(const SquareMatrix& u, const Decomposition& dec,
                            const VerificationReport& report,
                            const QuotientRun* intermediates) {
    std::string out;
    out += "u = " + format_matrix(u) + "\n";
    out += "d = " + format_matrix(dec.d) + "\n";
    out += "n = " + format_matrix(dec.n) + "\n";
    out += "h = " + format_polynomial(dec.h) + "\n";
    out += "annihilator = " + format_polynomial(dec.annihilator) + "\n";
    out += "p_tilde = " + format_polynomial(dec.p_tilde) + "\n";
    out += "p_bar = " + format_polynomial(dec.p_bar) + "\n";
    out += "iterations = " + std::to_string(dec.iterations) + "\n";
    if (intermediates) {
        out += "q = " + format_polynomial(intermediates->q) + "\n";
        for (std::size_t k = 0; k < intermediates->iterates.size(); ++k)
            out += "h_" + std::to_string(k) + " = " +
                   format_polynomial(intermediates->iterates[k]) + "\n";
    }
    out += format_report(report);
    return out;
}

Document parse_document(std::string_view text) {
    std::optional<SquareMatrix> u, d, n;
    Polynomial h, annihilator, p_tilde, p_bar;
    int iterations = 0;
    std::optional<VerificationReport> report;
    auto ensure_report = [&]() -> VerificationReport& {
        if (!report)
            report.emplace();
        return *report;
    };
    auto parse_flag = [](std::string_view v, std::string_view key) {
        if (v == "pass")
            return true;
        if (v == "fail")
            return false;
        throw parse_error("document: value of " + std::string(key) +
                          " must be pass or fail");
    };

    for (std::string_view line : split(text, '\n')) {
        std::string_view t = trim(line);
        if (t.empty() || t.front() == '#')
            continue;
        std::size_t eq = t.find('=');
        if (eq == std::string_view::npos)
            throw parse_error("document: expected 'key = value', got '" +
                              std::string(t) + "'");
        std::string key(trim(t.substr(0, eq)));
        std::string_view value = trim(t.substr(eq + 1));
        if (key == "u")
            u = parse_matrix(value);
        else if (key == "d")
            d = parse_matrix(value);
        else if (key == "n")
            n = parse_matrix(value);
        else if (key == "h")
            h = parse_polynomial(value);
        else if (key == "annihilator")
            annihilator = parse_polynomial(value);
        else if (key == "p_tilde")
            p_tilde = parse_polynomial(value);
        else if (key == "p_bar")
            p_bar = parse_polynomial(value);
        else if (key == "iterations")
            iterations = static_cast<int>(parse_integer(value, "document"));
        else if (key == "verification.sum")
            ensure_report().sum = parse_flag(value, key);
        else if (key == "verification.commutation")
            ensure_report().commutation = parse_flag(value, key);
        else if (key == "verification.nilpotency")
            ensure_report().nilpotency = parse_flag(value, key);
        else if (key == "verification.nilpotency_index")
            ensure_report().nilpotency_index =
                static_cast<int>(parse_integer(value, "document"));
        else if (key == "verification.separability")
            ensure_report().separability = parse_flag(value, key);
        else if (key == "verification.certificate")
            ensure_report().certificate = parse_flag(value, key);
        // Unknown keys (including verification.overall and emitted
        // intermediates) are tolerated so extended documents stay readable.
    }
    if (!d)
        throw parse_error("document: missing required field 'd'");
    if (!n)
        throw parse_error("document: missing required field 'n'");
    Decomposition dec{std::move(*d), std::move(*n),     std::move(h),
                      iterations,    std::move(annihilator), std::move(p_tilde),
                      std::move(p_bar), 1};
    return Document{std::move(u), std::move(dec), report};
}

} // namespace jcd
