#pragma once

#include <stdexcept>
#include <string>

namespace apexkit {

/// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedGraph6 : public Error {
 public:
  using Error::Error;
};

class EdgeAbsent : public Error {
 public:
  using Error::Error;
};

class VertexAbsent : public Error {
 public:
  using Error::Error;
};

class NotATwoCut : public Error {
 public:
  using Error::Error;
};

/// Witnesses avoiding the two cut vertices live on different sides of the cut.
class HeavyAmbiguous : public Error {
 public:
  using Error::Error;
};

class NotConnectivity2 : public Error {
 public:
  using Error::Error;
};

class NotClassifiable : public Error {
 public:
  using Error::Error;
};

class ConfigInvalid : public Error {
 public:
  using Error::Error;
};

}  // namespace apexkit
