#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tunnel_atlas {

/// Base of every error raised for invalid input. Internal invariant
/// failures use std::logic_error instead.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed word or step sequence; position is 1-based.
class ParseError : public Error {
public:
  ParseError(std::size_t position, const std::string& what)
      : Error("position " + std::to_string(position) + ": " + what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// The word has no 1, so the tunnel is simple or semisimple.
class NotRegular : public Error {
public:
  NotRegular()
      : Error("word has no 1 (simple or semisimple tunnel); use the semisimple range instead") {}
  explicit NotRegular(const std::string& what) : Error(what) {}
};

class InvalidSeed : public Error {
public:
  using Error::Error;
};

class NotCoprime : public Error {
public:
  using Error::Error;
};

class OutOfRange : public Error {
public:
  using Error::Error;
};

class TrivialKnot : public Error {
public:
  using Error::Error;
};

/// Enumeration horizon above the configured cap, or a search with no
/// candidate inside its horizon.
class SearchError : public Error {
public:
  using Error::Error;
};

} // namespace tunnel_atlas
