#ifndef SO32_IO_HPP
#define SO32_IO_HPP

#include <filesystem>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "so32/index.hpp"
#include "so32/quadrature.hpp"
#include "so32/sphere.hpp"
#include "so32/transforms.hpp"
#include "so32/verify.hpp"

namespace so32::io {

using json = nlohmann::ordered_json;

/// Coefficient file:
///   { "l_max": N, "entries": [ {"l":..,"m":..,"re":..,"im":..}, ... ] }
/// Entries appear in canonical (l, m) order; "im" is omitted for real
/// vectors. "overflow": true is appended only when the flag is set.
json to_json(const RealCoeffs& v);
json to_json(const ComplexCoeffs& v);

/// A file is read as complex when any entry carries "im".
using AnyCoeffs = std::variant<RealCoeffs, ComplexCoeffs>;
AnyCoeffs coeffs_from_json(const json& j);
ComplexCoeffs complex_coeffs_from_json(const json& j);

/// Grid file: { "m": M, "nodes": [...], "weights": [...], "values": [...] }
json to_json(const GridFunction& g);
GridFunction grid_from_json(const json& j);

/// Spectrum file: { "m": M, "basis": "orthonormal", "coeffs": [{"l":..,"c":..}] }
/// l_max is taken as the largest listed l unless given explicitly.
json to_json(const ChannelSpectrum& s);
ChannelSpectrum spectrum_from_json(const json& j);

/// Field file: { "theta_nodes": [...], "phi_count": B, "values": [[re, im], ...] }
/// theta_nodes are polar angles in radians, one per Gauss-Legendre node in
/// x = cos(theta) (ascending x, so descending theta). values are row-major
/// with theta as the slow index.
json to_json(const SphereField& f);
SphereField field_from_json(const json& j);

/// Report: suite, tool/version, parameters echo, ordered checks, overall pass.
json to_json(const VerifyReport& report);

json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& j);
/// Two-space indented dump with a trailing newline.
std::string dump(const json& j);

}  // namespace so32::io

#endif  // SO32_IO_HPP
