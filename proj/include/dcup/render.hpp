#ifndef DCUP_RENDER_HPP
#define DCUP_RENDER_HPP

#include <string>

#include <json.hpp>

#include "dcup/diagram.hpp"

namespace dcup {

enum class Format { Ascii, Tikz, Json };

Format parse_format(const std::string& s);

std::string render(const CupDiagram& d, Format f);

/// Two glyph rows: arc ends as `(` `)` `|`, dots as `*` under the arc.
std::string render_ascii(const CupDiagram& d);
std::string render_tikz(const CupDiagram& d);

nlohmann::ordered_json to_json(const CupDiagram& d);
CupDiagram diagram_from_json(const nlohmann::json& j);

}  // namespace dcup

#endif
