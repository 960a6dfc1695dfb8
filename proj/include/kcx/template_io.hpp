#pragma once

#include <iosfwd>
#include <string>

#include "kcx/template.hpp"

namespace kcx {

// A template with the k and palette it is meant for.
struct TemplateDocument {
    int k = 1;
    Palette palette;
    Template tmpl;

    friend bool operator==(const TemplateDocument&, const TemplateDocument&) = default;
};

// Line format, one directive per line, `#` starts a comment:
//   k <k>
//   palette plain <size> | palette list
//   list <v> <colour>...        (list mode)
//   precolour <v> <colour>
//   forbid <v> <colour>...
std::string to_text(const TemplateDocument& doc);
void write_template(std::ostream& out, const TemplateDocument& doc);

// Throws ParseError.
TemplateDocument read_template(std::istream& in);
TemplateDocument read_template_file(const std::string& path);

}  // namespace kcx
