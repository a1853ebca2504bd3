#include "ssfl/png_io.hpp"

#include <png.h>

#include <cmath>
#include <csetjmp>
#include <cstdio>
#include <memory>
#include <vector>

#include "ssfl/error.hpp"

namespace ssfl {
namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

void png_error_handler(png_structp png, png_const_charp msg) {
  // Jump back to the setjmp point; the message is recovered there.
  (void)msg;
  longjmp(png_jmpbuf(png), 1);
}

void png_warning_handler(png_structp, png_const_charp) {}

}  // namespace

RawImage read_png_gray(const std::string& path) {
  FilePtr file(std::fopen(path.c_str(), "rb"));
  if (!file) throw IoError("cannot open " + path);

  png_byte header[8];
  if (std::fread(header, 1, 8, file.get()) != 8 || png_sig_cmp(header, 0, 8) != 0)
    throw ParseError("not a PNG file: " + path);

  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr,
                                           png_error_handler, png_warning_handler);
  if (!png) throw IoError("libpng init failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw IoError("libpng init failed");
  }

  std::vector<png_bytep> row_ptrs;
  std::vector<png_byte> pixels;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw ParseError("malformed PNG: " + path);
  }

  png_init_io(png, file.get());
  png_set_sig_bytes(png, 8);
  png_read_info(png, info);

  const png_uint_32 width = png_get_image_width(png, info);
  const png_uint_32 height = png_get_image_height(png, info);
  const int color_type = png_get_color_type(png, info);
  int bit_depth = png_get_bit_depth(png, info);

  if (color_type != PNG_COLOR_TYPE_GRAY) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw NotGrayscale("expected grayscale PNG: " + path);
  }
  if (bit_depth < 8) {
    png_set_expand_gray_1_2_4_to_8(png);
    bit_depth = 8;
  }
  png_set_interlace_handling(png);
  png_read_update_info(png, info);

  const std::size_t row_bytes = png_get_rowbytes(png, info);
  pixels.resize(row_bytes * height);
  row_ptrs.resize(height);
  for (png_uint_32 r = 0; r < height; ++r) row_ptrs[r] = pixels.data() + r * row_bytes;
  png_read_image(png, row_ptrs.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);

  RawImage out;
  out.width = static_cast<int>(width);
  out.height = static_cast<int>(height);
  out.bit_depth = bit_depth;
  out.data.resize(static_cast<std::size_t>(width) * height);
  if (bit_depth == 8) {
    for (std::size_t i = 0; i < out.data.size(); ++i) out.data[i] = pixels[i];
  } else {
    // PNG stores 16-bit samples big-endian.
    for (std::size_t i = 0; i < out.data.size(); ++i)
      out.data[i] = static_cast<std::uint16_t>((pixels[2 * i] << 8) | pixels[2 * i + 1]);
  }
  return out;
}

void write_png_gray(const std::string& path, const RawImage& img) {
  if (img.bit_depth != 8 && img.bit_depth != 16)
    throw BitDepthUnsupported("bit depth must be 8 or 16");

  FilePtr file(std::fopen(path.c_str(), "wb"));
  if (!file) throw IoError("cannot write " + path);

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr,
                                            png_error_handler, png_warning_handler);
  if (!png) throw IoError("libpng init failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw IoError("libpng init failed");
  }

  std::vector<png_byte> rows;
  std::vector<png_bytep> row_ptrs;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw IoError("PNG write failed: " + path);
  }

  png_init_io(png, file.get());
  png_set_IHDR(png, info, img.width, img.height, img.bit_depth, PNG_COLOR_TYPE_GRAY,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);

  const std::size_t sample_bytes = img.bit_depth == 16 ? 2 : 1;
  const std::size_t row_bytes = static_cast<std::size_t>(img.width) * sample_bytes;
  rows.resize(row_bytes * img.height);
  for (int r = 0; r < img.height; ++r) {
    for (int c = 0; c < img.width; ++c) {
      const std::uint16_t v = img.data[static_cast<std::size_t>(r) * img.width + c];
      if (img.bit_depth == 8) {
        rows[static_cast<std::size_t>(r) * row_bytes + c] = static_cast<png_byte>(v & 0xff);
      } else {
        rows[static_cast<std::size_t>(r) * row_bytes + 2 * c] = static_cast<png_byte>(v >> 8);
        rows[static_cast<std::size_t>(r) * row_bytes + 2 * c + 1] = static_cast<png_byte>(v & 0xff);
      }
    }
  }
  row_ptrs.resize(img.height);
  for (int r = 0; r < img.height; ++r) row_ptrs[r] = rows.data() + static_cast<std::size_t>(r) * row_bytes;
  png_write_image(png, row_ptrs.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

void write_png_slice(const std::string& path, const SliceImage& slice, int bit_depth) {
  if (bit_depth != 8 && bit_depth != 16)
    throw BitDepthUnsupported("bit depth must be 8 or 16");
  RawImage raw;
  raw.width = slice.width;
  raw.height = slice.height;
  raw.bit_depth = bit_depth;
  raw.data.resize(slice.size());
  const double maxval = bit_depth == 8 ? 255.0 : 65535.0;
  for (std::size_t i = 0; i < slice.size(); ++i) {
    double v = slice.data[i];
    if (v < 0.0) v = 0.0;
    if (v > 1.0) v = 1.0;
    raw.data[i] = static_cast<std::uint16_t>(std::lround(v * maxval));
  }
  write_png_gray(path, raw);
}

void write_png_mask(const std::string& path, const BinaryImage& mask) {
  RawImage raw;
  raw.width = mask.width;
  raw.height = mask.height;
  raw.bit_depth = 8;
  raw.data.resize(mask.size());
  for (std::size_t i = 0; i < mask.size(); ++i) raw.data[i] = mask.data[i] ? 255 : 0;
  write_png_gray(path, raw);
}

}  // namespace ssfl
