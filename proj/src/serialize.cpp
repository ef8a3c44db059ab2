#include "spinsym/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace spinsym {

Format parse_format(std::string_view name) {
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    if (name == "latex") return Format::latex;
    if (name == "markdown") return Format::markdown;
    throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

json to_json(const Partition& p) { return json(p.parts()); }

Partition partition_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition JSON must be an array");
    return Partition(j.get<std::vector<int>>());
}

std::string rational_to_string(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    return c.get_str();
}

Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational '" + s + "'");
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

json to_json(const TPoly& f) {
    json out = json::array();
    for (const auto& c : f.coefficients()) out.push_back(rational_to_string(c));
    return out;
}

TPoly tpoly_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
    std::vector<Rational> coeffs;
    for (const auto& c : j) coeffs.push_back(rational_from_string(c.get<std::string>()));
    return TPoly(std::move(coeffs));
}

json to_json(const GammaElement& f) {
    json out = json::array();
    for (const auto& [mu, c] : f.terms()) out.push_back({{"partition", to_json(mu)}, {"coeff", to_json(c)}});
    return out;
}

GammaElement gamma_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("GammaElement JSON must be an array");
    GammaElement out;
    for (const auto& term : j) {
        const Partition mu = partition_from_json(term.at("partition"));
        if (!mu.is_odd()) throw std::invalid_argument("GammaElement key (" + mu.to_string() + ") is not odd");
        out.add_term(mu, tpoly_from_json(term.at("coeff")));
    }
    return out;
}

namespace {

template <typename Value, typename Encode>
json table_to_json(const Table<Value>& table, Encode encode) {
    json rows = json::array(), cols = json::array(), entries = json::array();
    for (const auto& r : table.rows) rows.push_back(to_json(r));
    for (const auto& c : table.cols) cols.push_back(to_json(c));
    for (const auto& line : table.entries) {
        json row = json::array();
        for (const auto& v : line) row.push_back(encode(v));
        entries.push_back(std::move(row));
    }
    return {{"kind", table.kind}, {"n", table.n}, {"rows", rows}, {"cols", cols}, {"entries", entries}};
}

template <typename Value, typename Decode>
Table<Value> table_from_json(const json& j, Decode decode) {
    Table<Value> table;
    table.kind = j.value("kind", "");
    table.n = j.at("n").get<int>();
    for (const auto& r : j.at("rows")) table.rows.push_back(partition_from_json(r));
    for (const auto& c : j.at("cols")) table.cols.push_back(partition_from_json(c));
    const auto& entries = j.at("entries");
    if (entries.size() != table.rows.size()) throw std::invalid_argument("table JSON: row count mismatch");
    for (const auto& line : entries) {
        if (line.size() != table.cols.size()) throw std::invalid_argument("table JSON: column count mismatch");
        std::vector<Value> row;
        for (const auto& v : line) row.push_back(decode(v));
        table.entries.push_back(std::move(row));
    }
    return table;
}

}  // namespace

json to_json(const PolyTable& table) {
    return table_to_json(table, [](const TPoly& f) { return to_json(f); });
}

PolyTable poly_table_from_json(const json& j) {
    return table_from_json<TPoly>(j, [](const json& v) { return tpoly_from_json(v); });
}

json to_json(const SpinCharTable& table) {
    return table_to_json(table, [](const Rational& r) { return json(rational_to_string(r)); });
}

SpinCharTable spin_char_table_from_json(const json& j) {
    return table_from_json<Rational>(j, [](const json& v) { return rational_from_string(v.get<std::string>()); });
}

std::string latex_partition(const Partition& p) {
    std::string out = "(";
    std::size_t i = 0;
    bool first = true;
    while (i < p.length()) {
        std::size_t j = i;
        while (j < p.length() && p[j] == p[i]) ++j;
        if (!first) out += ',';
        first = false;
        out += std::to_string(p[i]);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out + ")";
}

std::string latex_poly(const TPoly& f) {
    std::string plain = f.to_string();
    std::string out;
    for (std::size_t i = 0; i < plain.size(); ++i) {
        if (plain[i] == '^') {
            std::size_t j = i + 1;
            while (j < plain.size() && std::isdigit(static_cast<unsigned char>(plain[j]))) ++j;
            out += "^{" + plain.substr(i + 1, j - i - 1) + "}";
            i = j - 1;
        } else {
            out += plain[i];
        }
    }
    return out;
}

namespace {

std::string plain_label(const Partition& p) { return "(" + p.to_string() + ")"; }

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

// Display grid: side labels down, top labels across.
struct Grid {
    std::string corner;
    std::vector<Partition> side;
    std::vector<Partition> top;
    std::function<std::string(std::size_t, std::size_t, Format)> cell;
};

template <typename Value>
Grid make_grid(const Table<Value>& table, std::function<std::string(const Value&, Format)> show) {
    Grid g;
    const bool by_class = table.kind != "L";
    if (by_class) {
        g.corner = "mu\\lambda";
        g.side = table.cols;
        g.top = table.rows;
        g.cell = [&table, show](std::size_t s, std::size_t t, Format f) { return show(table.entries[t][s], f); };
    } else {
        g.corner = "lambda\\mu";
        g.side = table.rows;
        g.top = table.cols;
        g.cell = [&table, show](std::size_t s, std::size_t t, Format f) { return show(table.entries[s][t], f); };
    }
    return g;
}

std::string render_grid(const Grid& g, Format format) {
    std::ostringstream os;
    switch (format) {
        case Format::csv: {
            os << csv_quote(g.corner);
            for (const auto& t : g.top) os << ',' << csv_quote(plain_label(t));
            os << '\n';
            for (std::size_t s = 0; s < g.side.size(); ++s) {
                os << csv_quote(plain_label(g.side[s]));
                for (std::size_t t = 0; t < g.top.size(); ++t) os << ',' << csv_quote(g.cell(s, t, format));
                os << '\n';
            }
            break;
        }
        case Format::markdown: {
            os << "| " << g.corner;
            for (const auto& t : g.top) os << " | " << plain_label(t);
            os << " |\n|---";
            for (std::size_t t = 0; t < g.top.size(); ++t) os << "|---";
            os << "|\n";
            for (std::size_t s = 0; s < g.side.size(); ++s) {
                os << "| " << plain_label(g.side[s]);
                for (std::size_t t = 0; t < g.top.size(); ++t) os << " | " << g.cell(s, t, format);
                os << " |\n";
            }
            break;
        }
        case Format::latex: {
            const std::string corner = g.corner == "mu\\lambda" ? "$\\mu\\backslash \\lambda$"
                                                                : "$\\lambda\\backslash \\mu$";
            os << "\\begin{tabular}{|c|";
            for (std::size_t t = 0; t < g.top.size(); ++t) os << "c|";
            os << "}\n\\hline\n" << corner;
            for (const auto& t : g.top) os << " & $" << latex_partition(t) << "$";
            os << " \\\\\n\\hline\n";
            for (std::size_t s = 0; s < g.side.size(); ++s) {
                os << '$' << latex_partition(g.side[s]) << '$';
                for (std::size_t t = 0; t < g.top.size(); ++t) os << " & $" << g.cell(s, t, format) << '$';
                os << " \\\\\n\\hline\n";
            }
            os << "\\end{tabular}\n";
            break;
        }
        case Format::json:
            throw std::logic_error("render_grid: JSON is not a grid format");
    }
    return os.str();
}

}  // namespace

std::string render(const PolyTable& table, Format format) {
    if (format == Format::json) return to_json(table).dump(2) + "\n";
    const Grid g = make_grid<TPoly>(table, [](const TPoly& f, Format fmt) {
        return fmt == Format::latex ? latex_poly(f) : f.to_string();
    });
    return render_grid(g, format);
}

std::string render(const SpinCharTable& table, Format format) {
    if (format == Format::json) return to_json(table).dump(2) + "\n";
    const Grid g = make_grid<Rational>(table, [](const Rational& r, Format) { return rational_to_string(r); });
    return render_grid(g, format);
}

std::string render_expansion(const std::map<Partition, TPoly>& terms, std::string_view symbol, Format format) {
    if (format == Format::json) {
        json out = json::array();
        for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
            if (it->second.is_zero()) continue;
            out.push_back({{"partition", to_json(it->first)}, {"coeff", to_json(it->second)}});
        }
        return out.dump(2) + "\n";
    }
    std::ostringstream os;
    if (format == Format::csv) {
        os << "partition,coeff\n";
        for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
            if (it->second.is_zero()) continue;
            os << csv_quote(plain_label(it->first)) << ',' << csv_quote(it->second.to_string()) << '\n';
        }
        return os.str();
    }
    const bool tex = format == Format::latex;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const TPoly& c = it->second;
        if (c.is_zero()) continue;
        TPoly shown = c;
        const bool negative = c.leading() < 0;
        if (negative) shown = -c;
        os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
        first = false;
        if (shown != TPoly(1)) {
            const std::string body = tex ? latex_poly(shown) : shown.to_string();
            const bool single = std::count_if(shown.coefficients().begin(), shown.coefficients().end(),
                                              [](const Rational& r) { return r != 0; }) == 1;
            os << (single ? body : "(" + body + ")");
        }
        os << symbol;
        if (tex) {
            os << "_{" << latex_partition(it->first) << "}";
        } else {
            os << plain_label(it->first);
        }
    }
    if (first) os << '0';
    const std::string line = os.str();
    return tex ? "$" + line + "$\n" : line + "\n";
}

}  // namespace spinsym
