#pragma once

#include <map>
#include <string>
#include <string_view>

#include <json.hpp>

#include "spinsym/gamma_element.hpp"
#include "spinsym/table.hpp"

namespace spinsym {

using json = nlohmann::json;

enum class Format { json, csv, latex, markdown };

Format parse_format(std::string_view name);

// Partition <-> [4,2,1]
json to_json(const Partition& p);
Partition partition_from_json(const json& j);

// Rational <-> "num/den", integers without "/1".
std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

// TPoly <-> ascending coefficient strings, 2t+1 -> ["1","2"].
json to_json(const TPoly& f);
TPoly tpoly_from_json(const json& j);

// GammaElement <-> [{"partition": [...], "coeff": [...]}, ...] in key order.
json to_json(const GammaElement& f);
GammaElement gamma_from_json(const json& j);

// {"kind", "n", "rows", "cols", "entries"}
json to_json(const PolyTable& table);
PolyTable poly_table_from_json(const json& j);
json to_json(const SpinCharTable& table);
SpinCharTable spin_char_table_from_json(const json& j);

// Human formats lay Y and zeta tables out with mu down the side and lambda
// across the top; L tables keep lambda down the side.
std::string render(const PolyTable& table, Format format);
std::string render(const SpinCharTable& table, Format format);

// Linear combination of basis elements `symbol`_lambda, e.g. Q or p. Terms
// are listed from the smallest index in lexicographic order upwards.
// JSON gives [{"partition", "coeff"}]; CSV gives one partition,coeff row per
// term; markdown and LaTeX give a one-line sum.
std::string render_expansion(const std::map<Partition, TPoly>& terms, std::string_view symbol, Format format);

// "(3,1^2)" style label used by the LaTeX emitter.
std::string latex_partition(const Partition& p);
// "2t^{2}+8t+5"
std::string latex_poly(const TPoly& f);

}  // namespace spinsym
