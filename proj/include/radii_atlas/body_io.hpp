#pragma once

#include <string>

#include <json.hpp>

#include "radii_atlas/geometry.hpp"

namespace radii_atlas {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

nlohmann::json body_to_json(const ArcPolygon& body);
// Throws DomainError on malformed content.
ArcPolygon body_from_json(const nlohmann::json& j);

ArcPolygon load_body(const std::string& path);
void save_body(const ArcPolygon& body, const std::string& path);

}  // namespace radii_atlas
