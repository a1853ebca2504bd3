#pragma once

#include <string>

#include "ssfl/image.hpp"

namespace ssfl {

// Reads a grayscale PNG. Bit depths 1/2/4 are expanded to 8; 16 stays 16.
// Throws IoError if the file cannot be opened, ParseError on malformed data,
// NotGrayscale for palette/color/alpha images.
RawImage read_png_gray(const std::string& path);

// Writes a grayscale PNG at the given bit depth (8 or 16). Values must
// already fit the depth. Throws BitDepthUnsupported or IoError.
void write_png_gray(const std::string& path, const RawImage& img);

// Quantizes a [0,1] slice to the given bit depth and writes it.
void write_png_slice(const std::string& path, const SliceImage& slice, int bit_depth = 8);

// 0/1 map written as 0/255 for inspection.
void write_png_mask(const std::string& path, const BinaryImage& mask);

}  // namespace ssfl
