#pragma once

#include <string>

#include <json.hpp>

#include "kcx/extractor.hpp"

namespace kcx {

using Json = nlohmann::ordered_json;

// Field order is fixed so equal certificates serialize to equal bytes.
Json to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& doc);

std::string to_text(const Certificate& cert);
// Throws ParseError on malformed documents.
Certificate parse_certificate(const std::string& text);
Certificate read_certificate_file(const std::string& path);
void write_certificate_file(const std::string& path, const Certificate& cert);

Json to_json(const ListAssignment& lists);
ListAssignment lists_from_json(const Json& doc);

}  // namespace kcx
