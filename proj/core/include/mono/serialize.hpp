#pragma once

// JSON output (deterministic, 17 significant digits, fixed key order),
// points-file parsing, and the run manifest.  Serialization is hand-rolled
// streaming so identical inputs yield byte-identical files; parsing reuses a
// standard JSON parser internally.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mono/harmonics.hpp"
#include "mono/near_zonal.hpp"
#include "mono/sphere.hpp"
#include "mono/sphere_opt.hpp"

namespace mono {

// Shortest round-trip decimal for finite doubles ("%.17g").
std::string format_double(double v);

// Minimal streaming JSON writer with automatic comma placement.  Keys are
// emitted in call order, so output is deterministic by construction.
class JsonWriter {
 public:
  void begin_object();
  void end_object();
  void begin_array();
  void end_array();
  JsonWriter& key(std::string_view k);
  void value(double v);
  void value(int v);
  void value(std::int64_t v);
  void value(std::uint64_t v);
  void value(bool v);
  void value(std::string_view v);

  const std::string& str() const { return out_; }

 private:
  void comma();

  std::string out_;
  std::vector<bool> needs_comma_;
  bool pending_key_ = false;
};

// SHA-1 digest as lowercase hex (content hashing for run manifests).
std::string sha1_hex(std::string_view data);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

// ---------------------------------------------------------------------------
// Points files: JSON array of [x, y, z] unit vectors, or [theta, phi] pairs
// when spherical.  Cartesian entries must be unit within 1e-3 and are
// renormalized.  Malformed content throws std::runtime_error.

enum class PointsFormat { kCartesian, kSpherical };

std::vector<Vec3> parse_points_text(const std::string& text,
                                    PointsFormat format);
std::vector<Vec3> parse_points_file(const std::string& path,
                                    PointsFormat format);

// ---------------------------------------------------------------------------
// Value serializers (schemas documented in README).

void write_vec3(JsonWriter& w, const Vec3& v);
void write_points(JsonWriter& w, const std::vector<Vec3>& pts);
void write_multivector(JsonWriter& w, const Multivector3& m);
void write_even(JsonWriter& w, const EvenElement& e);
void write_real_matrix(JsonWriter& w, const RealMatrix& m);
void write_even_matrix(JsonWriter& w, const EvenMatrix& m);

// Full optimize-command payload: config echo, best result, per-start data.
std::string optimize_result_json(const OptimizerConfig& config,
                                 const MultiStartResult& result);

// Basis bundles: {"kind","k","points","G","A","objective","deviations"}.
std::string harmonic_bundle_json(const ZonalHarmonicBasis& basis,
                                 double objective_value,
                                 const std::vector<double>& deviations);
std::string monogenic_bundle_json(const NearZonalBasis& basis,
                                  double objective_value,
                                  const std::vector<double>& deviations);

// ---------------------------------------------------------------------------

struct RunManifest {
  std::string command;              // subcommand name
  std::string config_json;          // flags as a JSON object (inline)
  std::string content_hash;         // sha1 over command + config + inputs
  std::vector<std::string> outputs; // paths written
  double wall_time_seconds = 0.0;
  bool pass = true;
};

std::string manifest_json(const RunManifest& m);

}  // namespace mono
