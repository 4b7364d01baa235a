#ifndef KNOTSIEVE_ERRORS_HPP
#define KNOTSIEVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace knotsieve {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (PD codes, Conway notation, polynomials, records).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A construction or operation produced (or was given) a link with more than
/// one component where a knot is required.
class MultiComponentError : public Error {
 public:
  explicit MultiComponentError(int components)
      : Error("diagram has " + std::to_string(components) + " components"),
        components_(components) {}

  int components() const noexcept { return components_; }

 private:
  int components_;
};

class InvalidDiagramError : public Error {
 public:
  using Error::Error;
};

/// Raised when a bracket evaluation would need a frontier wider than the
/// configured cap.
class ResourceError : public Error {
 public:
  ResourceError(int width, int cap)
      : Error("frontier width " + std::to_string(width) + " exceeds cap " +
              std::to_string(cap)),
        width_(width),
        cap_(cap) {}

  int width() const noexcept { return width_; }
  int cap() const noexcept { return cap_; }

 private:
  int width_;
  int cap_;
};

class CorruptCheckpointError : public Error {
 public:
  using Error::Error;
};

}  // namespace knotsieve

#endif  // KNOTSIEVE_ERRORS_HPP
