#pragma once

#include <stdexcept>
#include <string>

namespace foresight {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A bounding box collapsed to zero area (e.g. after clamping to an image).
struct DegenerateBox : Error {
  explicit DegenerateBox(const std::string& msg) : Error(msg) {}
};

struct SpecInfeasible : Error {
  explicit SpecInfeasible(const std::string& msg) : Error(msg) {}
};

struct SpliceInvalid : Error {
  explicit SpliceInvalid(const std::string& msg) : Error(msg) {}
};

struct MissingRevision : Error {
  explicit MissingRevision(const std::string& msg) : Error(msg) {}
};

struct MissingTranscript : Error {
  explicit MissingTranscript(const std::string& msg) : Error(msg) {}
};

struct UnknownSample : Error {
  explicit UnknownSample(const std::string& msg) : Error(msg) {}
};

struct IoError : Error {
  explicit IoError(const std::string& msg) : Error(msg) {}
};

struct ModelError : Error {
  enum class Kind { transport, status, timeout, overlong };
  Kind kind;
  ModelError(Kind k, const std::string& msg) : Error(msg), kind(k) {}
};

}  // namespace foresight
