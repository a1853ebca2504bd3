#pragma once

#include <stdexcept>
#include <string>

namespace ssfl {

// Base class for every error the library raises. Each condition gets its
// own type so callers (and tests) can catch precisely.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define SSFL_DEFINE_ERROR(Name)                                        \
  class Name : public Error {                                          \
  public:                                                              \
    explicit Name(const std::string& msg) : Error(msg) {}              \
  }

SSFL_DEFINE_ERROR(IoError);
SSFL_DEFINE_ERROR(ParseError);
SSFL_DEFINE_ERROR(EmptyVolume);
SSFL_DEFINE_ERROR(DimensionMismatch);
SSFL_DEFINE_ERROR(NotGrayscale);
SSFL_DEFINE_ERROR(BitDepthUnsupported);
SSFL_DEFINE_ERROR(EmptySlice);
SSFL_DEFINE_ERROR(BadKernel);
SSFL_DEFINE_ERROR(MapMismatch);
SSFL_DEFINE_ERROR(EmptyInput);
SSFL_DEFINE_ERROR(WindowOutOfRange);
SSFL_DEFINE_ERROR(ShapeMismatch);
SSFL_DEFINE_ERROR(LengthMismatch);
SSFL_DEFINE_ERROR(EmptyDataset);
SSFL_DEFINE_ERROR(UnlabeledVolume);
SSFL_DEFINE_ERROR(NonFiniteActivation);
SSFL_DEFINE_ERROR(BadSpec);
SSFL_DEFINE_ERROR(BadConfig);

#undef SSFL_DEFINE_ERROR

}  // namespace ssfl
