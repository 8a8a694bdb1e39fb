#pragma once

#include "sphsep/io.hpp"

#include <optional>
#include <string>

namespace sphsep {

// Deterministic SVG picture of a 2D or 3D instance, optionally with its
// separator layer. Fixed 800x800 viewport, origin centered, y up.
// Throws ValidationError for dimensions above 3.
std::string render_svg(const InstanceFile& instance,
                       const std::optional<CertificateFile>& certificate = std::nullopt);

}  // namespace sphsep
