#include "ssfl/volume_io.hpp"

#include <cstring>
#include <filesystem>
#include <fstream>
#include <set>

#include <json.hpp>

#include "ssfl/error.hpp"
#include "ssfl/png_io.hpp"

namespace ssfl {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

constexpr char kEmbeddingMagic[8] = {'S', 'S', 'F', 'L', 'E', 'M', 'B', '1'};

VolumeManifest manifest_from_json(const json& doc, const std::string& origin) {
  if (!doc.is_object()) throw ParseError(origin + ": manifest must be a JSON object");
  VolumeManifest m;
  if (!doc.contains("id") || !doc["id"].is_string())
    throw ParseError(origin + ": missing string field \"id\"");
  m.id = doc["id"].get<std::string>();
  if (doc.contains("label")) {
    if (!doc["label"].is_number_integer())
      throw ParseError(origin + ": \"label\" must be an integer");
    const int label = doc["label"].get<int>();
    if (label != 0 && label != 1) throw ParseError(origin + ": \"label\" must be 0 or 1");
    m.label = label;
  }
  if (!doc.contains("slices") || !doc["slices"].is_array())
    throw ParseError(origin + ": missing array field \"slices\"");
  for (const auto& entry : doc["slices"]) {
    if (!entry.is_string()) throw ParseError(origin + ": slice paths must be strings");
    m.slice_paths.push_back(entry.get<std::string>());
  }
  if (m.slice_paths.empty()) throw EmptyVolume(origin + ": volume " + m.id + " has no slices");
  std::set<std::string> unique(m.slice_paths.begin(), m.slice_paths.end());
  if (unique.size() != m.slice_paths.size())
    throw ParseError(origin + ": volume " + m.id + " lists a slice path twice");
  return m;
}

void write_u32(std::ostream& out, std::uint32_t v) {
  char b[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
               static_cast<char>((v >> 16) & 0xff), static_cast<char>((v >> 24) & 0xff)};
  out.write(b, 4);
}

std::uint32_t read_u32(std::istream& in, const std::string& path) {
  unsigned char b[4];
  if (!in.read(reinterpret_cast<char*>(b), 4)) throw ParseError("truncated embedding file: " + path);
  return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

}  // namespace

VolumeManifest parse_manifest(const std::string& json_text, const std::string& origin) {
  json doc = json::parse(json_text, nullptr, false);
  if (doc.is_discarded()) throw ParseError(origin + ": invalid JSON");
  return manifest_from_json(doc, origin);
}

VolumeManifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open manifest " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  VolumeManifest m = parse_manifest(text, path);
  m.base_dir = fs::path(path).parent_path().string();
  return m;
}

SliceImage normalize_intensity(const RawImage& raw) {
  if (raw.bit_depth != 8 && raw.bit_depth != 16)
    throw BitDepthUnsupported("bit depth must be 8 or 16, got " + std::to_string(raw.bit_depth));
  const double denom = raw.bit_depth == 8 ? 255.0 : 65535.0;
  SliceImage out(raw.width, raw.height);
  for (std::size_t i = 0; i < raw.data.size(); ++i)
    out.data[i] = static_cast<float>(raw.data[i] / denom);
  return out;
}

CtVolume load_volume(const VolumeManifest& manifest) {
  CtVolume volume;
  volume.manifest = manifest;
  volume.slices.reserve(manifest.slice_paths.size());
  for (const auto& rel : manifest.slice_paths) {
    const fs::path full = manifest.base_dir.empty() ? fs::path(rel) : fs::path(manifest.base_dir) / rel;
    RawImage raw = read_png_gray(full.string());
    SliceImage slice = normalize_intensity(raw);
    if (!volume.slices.empty() &&
        (slice.width != volume.slices.front().width || slice.height != volume.slices.front().height)) {
      throw DimensionMismatch("volume " + manifest.id + ": slice " + rel + " is " +
                              std::to_string(slice.width) + "x" + std::to_string(slice.height) +
                              ", expected " + std::to_string(volume.slices.front().width) + "x" +
                              std::to_string(volume.slices.front().height));
    }
    volume.slices.push_back(std::move(slice));
  }
  return volume;
}

void write_embeddings(const EmbeddingMatrix& matrix, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out.write(kEmbeddingMagic, 8);
  write_u32(out, static_cast<std::uint32_t>(matrix.n_slices));
  write_u32(out, static_cast<std::uint32_t>(matrix.dim));
  for (float v : matrix.data) {
    std::uint32_t bits;
    std::memcpy(&bits, &v, 4);
    write_u32(out, bits);
  }
  if (!out) throw IoError("write failed: " + path);
}

EmbeddingMatrix read_embeddings(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  char magic[8];
  if (!in.read(magic, 8) || std::memcmp(magic, kEmbeddingMagic, 8) != 0)
    throw ParseError("bad embedding magic: " + path);
  const std::uint32_t rows = read_u32(in, path);
  const std::uint32_t cols = read_u32(in, path);
  EmbeddingMatrix m(rows, cols);
  for (std::size_t i = 0; i < m.data.size(); ++i) {
    const std::uint32_t bits = read_u32(in, path);
    std::memcpy(&m.data[i], &bits, 4);
  }
  return m;
}

DatasetStats dataset_stats(const std::vector<VolumeManifest>& manifests) {
  DatasetStats s;
  for (const auto& m : manifests) {
    if (!m.label.has_value())
      ++s.n_unlabeled;
    else if (*m.label == 1)
      ++s.n_positive;
    else
      ++s.n_negative;
  }
  s.total = s.n_positive + s.n_negative + s.n_unlabeled;
  return s;
}

}  // namespace ssfl
