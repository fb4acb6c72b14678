#include "mono/serialize.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace mono {

std::string format_double(double v) {
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.17g", v);
  return std::string(buf.data());
}

void JsonWriter::comma() {
  if (pending_key_) {
    pending_key_ = false;
    return;
  }
  if (!needs_comma_.empty()) {
    if (needs_comma_.back()) out_ += ',';
    needs_comma_.back() = true;
  }
}

void JsonWriter::begin_object() {
  comma();
  out_ += '{';
  needs_comma_.push_back(false);
}

void JsonWriter::end_object() {
  out_ += '}';
  needs_comma_.pop_back();
}

void JsonWriter::begin_array() {
  comma();
  out_ += '[';
  needs_comma_.push_back(false);
}

void JsonWriter::end_array() {
  out_ += ']';
  needs_comma_.pop_back();
}

JsonWriter& JsonWriter::key(std::string_view k) {
  comma();
  out_ += '"';
  out_ += k;
  out_ += "\":";
  pending_key_ = true;
  return *this;
}

void JsonWriter::value(double v) {
  comma();
  out_ += format_double(v);
}

void JsonWriter::value(int v) { value(static_cast<std::int64_t>(v)); }

void JsonWriter::value(std::int64_t v) {
  comma();
  out_ += std::to_string(v);
}

void JsonWriter::value(std::uint64_t v) {
  comma();
  out_ += std::to_string(v);
}

void JsonWriter::value(bool v) {
  comma();
  out_ += v ? "true" : "false";
}

void JsonWriter::value(std::string_view v) {
  comma();
  out_ += '"';
  for (char c : v) {
    switch (c) {
      case '"':
        out_ += "\\\"";
        break;
      case '\\':
        out_ += "\\\\";
        break;
      case '\n':
        out_ += "\\n";
        break;
      case '\t':
        out_ += "\\t";
        break;
      case '\r':
        out_ += "\\r";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          std::array<char, 8> esc{};
          std::snprintf(esc.data(), esc.size(), "\\u%04x", c);
          out_ += esc.data();
        } else {
          out_ += c;
        }
    }
  }
  out_ += '"';
}

// ---------------------------------------------------------------------------

std::string sha1_hex(std::string_view data) {
  // FIPS 180-1.  Message is padded to 512-bit blocks with a 64-bit length.
  std::uint32_t h0 = 0x67452301u, h1 = 0xEFCDAB89u, h2 = 0x98BADCFEu,
                h3 = 0x10325476u, h4 = 0xC3D2E1F0u;

  std::string msg(data);
  const std::uint64_t bit_len = static_cast<std::uint64_t>(msg.size()) * 8;
  msg += static_cast<char>(0x80);
  while (msg.size() % 64 != 56) msg += '\0';
  for (int i = 7; i >= 0; --i) {
    msg += static_cast<char>((bit_len >> (8 * i)) & 0xFF);
  }

  const auto rotl = [](std::uint32_t x, int s) {
    return (x << s) | (x >> (32 - s));
  };

  for (std::size_t chunk = 0; chunk < msg.size(); chunk += 64) {
    std::array<std::uint32_t, 80> w{};
    for (int i = 0; i < 16; ++i) {
      w[static_cast<std::size_t>(i)] =
          (static_cast<std::uint32_t>(
               static_cast<unsigned char>(msg[chunk + 4 * i])) << 24) |
          (static_cast<std::uint32_t>(
               static_cast<unsigned char>(msg[chunk + 4 * i + 1])) << 16) |
          (static_cast<std::uint32_t>(
               static_cast<unsigned char>(msg[chunk + 4 * i + 2])) << 8) |
          static_cast<std::uint32_t>(
              static_cast<unsigned char>(msg[chunk + 4 * i + 3]));
    }
    for (int i = 16; i < 80; ++i) {
      w[static_cast<std::size_t>(i)] =
          rotl(w[static_cast<std::size_t>(i - 3)] ^
               w[static_cast<std::size_t>(i - 8)] ^
               w[static_cast<std::size_t>(i - 14)] ^
               w[static_cast<std::size_t>(i - 16)], 1);
    }
    std::uint32_t a = h0, b = h1, c = h2, d = h3, e = h4;
    for (int i = 0; i < 80; ++i) {
      std::uint32_t f, k;
      if (i < 20) {
        f = (b & c) | ((~b) & d);
        k = 0x5A827999u;
      } else if (i < 40) {
        f = b ^ c ^ d;
        k = 0x6ED9EBA1u;
      } else if (i < 60) {
        f = (b & c) | (b & d) | (c & d);
        k = 0x8F1BBCDCu;
      } else {
        f = b ^ c ^ d;
        k = 0xCA62C1D6u;
      }
      const std::uint32_t tmp =
          rotl(a, 5) + f + e + k + w[static_cast<std::size_t>(i)];
      e = d;
      d = c;
      c = rotl(b, 30);
      b = a;
      a = tmp;
    }
    h0 += a;
    h1 += b;
    h2 += c;
    h3 += d;
    h4 += e;
  }

  std::array<char, 41> hex{};
  std::snprintf(hex.data(), hex.size(), "%08x%08x%08x%08x%08x", h0, h1, h2,
                h3, h4);
  return std::string(hex.data());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("short write: " + path);
}

// ---------------------------------------------------------------------------

std::vector<Vec3> parse_points_text(const std::string& text,
                                    PointsFormat format) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("points file: invalid JSON: ") +
                             e.what());
  }
  if (!doc.is_array()) {
    throw std::runtime_error("points file: top level must be an array");
  }
  std::vector<Vec3> out;
  out.reserve(doc.size());
  for (const auto& entry : doc) {
    if (!entry.is_array()) {
      throw std::runtime_error("points file: each point must be an array");
    }
    if (format == PointsFormat::kSpherical) {
      if (entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
        throw std::runtime_error(
            "points file: spherical points must be [theta, phi]");
      }
      out.push_back(
          SpherePoint{entry[0].get<double>(), entry[1].get<double>()}.cart());
    } else {
      if (entry.size() != 3 || !entry[0].is_number() ||
          !entry[1].is_number() || !entry[2].is_number()) {
        throw std::runtime_error(
            "points file: cartesian points must be [x, y, z]");
      }
      Vec3 v{entry[0].get<double>(), entry[1].get<double>(),
             entry[2].get<double>()};
      const double n = norm(v);
      if (std::fabs(n - 1.0) > 1e-3) {
        throw std::runtime_error(
            "points file: cartesian point is not a unit vector");
      }
      out.push_back(scale(v, 1.0 / n));
    }
  }
  return out;
}

std::vector<Vec3> parse_points_file(const std::string& path,
                                    PointsFormat format) {
  return parse_points_text(read_file(path), format);
}

// ---------------------------------------------------------------------------

void write_vec3(JsonWriter& w, const Vec3& v) {
  w.begin_array();
  w.value(v[0]);
  w.value(v[1]);
  w.value(v[2]);
  w.end_array();
}

void write_points(JsonWriter& w, const std::vector<Vec3>& pts) {
  w.begin_array();
  for (const Vec3& p : pts) write_vec3(w, p);
  w.end_array();
}

void write_multivector(JsonWriter& w, const Multivector3& m) {
  w.begin_object();
  for (int i = 0; i < kBladeCount; ++i) {
    w.key(kBladeName[static_cast<std::size_t>(i)]);
    w.value(m.c[static_cast<std::size_t>(i)]);
  }
  w.end_object();
}

void write_even(JsonWriter& w, const EvenElement& e) {
  w.begin_object();
  w.key("s");
  w.value(e.s);
  w.key("e12");
  w.value(e.e12);
  w.key("e13");
  w.value(e.e13);
  w.key("e23");
  w.value(e.e23);
  w.end_object();
}

void write_real_matrix(JsonWriter& w, const RealMatrix& m) {
  w.begin_array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    w.begin_array();
    for (std::size_t j = 0; j < m.cols(); ++j) w.value(m(i, j));
    w.end_array();
  }
  w.end_array();
}

void write_even_matrix(JsonWriter& w, const EvenMatrix& m) {
  w.begin_array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    w.begin_array();
    for (std::size_t j = 0; j < m.cols(); ++j) write_even(w, m(i, j));
    w.end_array();
  }
  w.end_array();
}

std::string optimize_result_json(const OptimizerConfig& config,
                                 const MultiStartResult& result) {
  JsonWriter w;
  w.begin_object();
  w.key("kind");
  w.value(config.kind == BasisKind::kHarmonic ? std::string_view("harmonic")
                                              : std::string_view("monogenic"));
  w.key("k");
  w.value(config.k);
  w.key("seed");
  w.value(static_cast<std::uint64_t>(config.seed));
  w.key("starts");
  w.value(config.starts);
  w.key("objective");
  w.value(result.best.objective);
  w.key("points");
  write_points(w, result.best.points);
  w.key("iterations");
  w.value(result.best.iterations);
  w.key("converged");
  w.value(result.best.converged);
  w.key("start_index");
  w.value(result.best.start_index);
  w.key("trace");
  w.begin_array();
  for (double v : result.best.trace) w.value(v);
  w.end_array();
  w.key("objectives");
  w.begin_array();
  for (double v : result.objectives) w.value(v);
  w.end_array();
  w.key("converged_count");
  w.value(result.converged_count);
  w.end_object();
  return w.str();
}

namespace {

void write_deviations(JsonWriter& w, const std::vector<double>& deviations) {
  w.key("deviations");
  w.begin_array();
  for (double v : deviations) w.value(v);
  w.end_array();
}

}  // namespace

std::string harmonic_bundle_json(const ZonalHarmonicBasis& basis,
                                 double objective_value,
                                 const std::vector<double>& deviations) {
  JsonWriter w;
  w.begin_object();
  w.key("kind");
  w.value(std::string_view("harmonic"));
  w.key("k");
  w.value(basis.k);
  w.key("points");
  write_points(w, basis.eta);
  w.key("G");
  write_real_matrix(w, basis.gram);
  w.key("A");
  write_real_matrix(w, basis.coefficients);
  w.key("objective");
  w.value(objective_value);
  write_deviations(w, deviations);
  w.end_object();
  return w.str();
}

std::string monogenic_bundle_json(const NearZonalBasis& basis,
                                  double objective_value,
                                  const std::vector<double>& deviations) {
  JsonWriter w;
  w.begin_object();
  w.key("kind");
  w.value(std::string_view("monogenic"));
  w.key("k");
  w.value(basis.k);
  w.key("points");
  write_points(w, basis.eta);
  w.key("G");
  write_even_matrix(w, basis.gram);
  w.key("A");
  write_even_matrix(w, basis.coefficients);
  w.key("objective");
  w.value(objective_value);
  write_deviations(w, deviations);
  w.end_object();
  return w.str();
}

std::string manifest_json(const RunManifest& m) {
  // config_json is already a serialized object, so the manifest is spliced
  // by hand rather than through JsonWriter.
  std::string out = "{\"command\":";
  {
    JsonWriter cmd;
    cmd.value(std::string_view(m.command));
    out += cmd.str();
  }
  out += ",\"config\":";
  out += m.config_json.empty() ? "{}" : m.config_json;
  out += ",\"content_hash\":\"" + m.content_hash + "\"";
  out += ",\"outputs\":[";
  for (std::size_t i = 0; i < m.outputs.size(); ++i) {
    if (i) out += ',';
    JsonWriter p;
    p.value(std::string_view(m.outputs[i]));
    out += p.str();
  }
  out += "]";
  out += ",\"wall_time_seconds\":" + format_double(m.wall_time_seconds);
  out += ",\"pass\":";
  out += m.pass ? "true" : "false";
  out += "}";
  return out;
}

}  // namespace mono
