#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ssfl/embedding.hpp"
#include "ssfl/image.hpp"

namespace ssfl {

// Describes one CT volume on disk: identity, optional binary label
// (1 = COVID, 0 = non-COVID) and the ordered slice files.
struct VolumeManifest {
  std::string id;
  std::optional<int> label;
  std::vector<std::string> slice_paths;
  // Directory the manifest was loaded from; slice paths resolve against it.
  // Not part of the serialized form.
  std::string base_dir;
};

// Ordered stack of normalized grayscale slices, all the same size.
struct CtVolume {
  VolumeManifest manifest;
  std::vector<SliceImage> slices;
};

struct DatasetStats {
  std::uint64_t n_positive = 0;
  std::uint64_t n_negative = 0;
  std::uint64_t n_unlabeled = 0;
  std::uint64_t total = 0;
};

// Parses a manifest JSON file: {"id": string, "label": 0|1 (optional),
// "slices": [path, ...]}. Throws ParseError on malformed input, EmptyVolume
// when the slice list is empty.
VolumeManifest load_manifest(const std::string& path);

// Same schema, from an in-memory JSON string (base_dir left empty).
VolumeManifest parse_manifest(const std::string& json_text, const std::string& origin = "<memory>");

// raw / (2^bit_depth - 1), dimensions preserved. bit_depth must be 8 or 16.
SliceImage normalize_intensity(const RawImage& raw);

// Loads every slice in manifest order, normalized to [0,1]. Throws IoError,
// DimensionMismatch when slice sizes differ, NotGrayscale for color inputs.
CtVolume load_volume(const VolumeManifest& manifest);

// Binary embedding container: magic "SSFLEMB1", u32 n_slices, u32 dim, then
// n_slices*dim float32 row-major, all little-endian.
void write_embeddings(const EmbeddingMatrix& matrix, const std::string& path);
EmbeddingMatrix read_embeddings(const std::string& path);

// Label-count summary over a set of manifests.
DatasetStats dataset_stats(const std::vector<VolumeManifest>& manifests);

}  // namespace ssfl
