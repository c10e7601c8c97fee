#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordlen {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class NotIrreflexive : public Error {
 public:
  explicit NotIrreflexive(int element)
      : Error("relation is not irreflexive at element " + std::to_string(element)), element(element) {}
  int element;
};

// four elements a<b, c<d with a||d and c||b
struct TwoPlusTwo {
  int a = 0, b = 0, c = 0, d = 0;
};

class NotIntervalOrder : public Error {
 public:
  explicit NotIntervalOrder(TwoPlusTwo w)
      : Error("relation contains an induced 2+2 on {" + std::to_string(w.a) + "<" +
              std::to_string(w.b) + ", " + std::to_string(w.c) + "<" + std::to_string(w.d) + "}"),
        certificate(w) {}
  TwoPlusTwo certificate;
};

class MalformedInterval : public Error {
 public:
  MalformedInterval(std::size_t index, const std::string& why)
      : Error("interval " + std::to_string(index + 1) + ": " + why), index(index) {}
  std::size_t index;
};

class NotAscentSequence : public Error {
 public:
  explicit NotAscentSequence(std::size_t index)
      : Error("not an ascent sequence at position " + std::to_string(index)), index(index) {}
  std::size_t index;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

class NotAGap : public Error {
 public:
  using Error::Error;
};

class SideConditionViolated : public Error {
 public:
  using Error::Error;
};

class UndefinedSlack : public Error {
 public:
  using Error::Error;
};

class NotACycle : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t expected, std::size_t got)
      : Error("expected a vector of length " + std::to_string(expected) + ", got " +
              std::to_string(got)) {}
};

// caps and search budgets; the CLI maps these to their own exit code
class LimitExceeded : public Error {
 public:
  LimitExceeded(const std::string& what, std::size_t limit)
      : Error(what + " exceeded the limit of " + std::to_string(limit)), limit(limit) {}
  std::size_t limit;
};

class CycleLimitExceeded : public LimitExceeded {
 public:
  explicit CycleLimitExceeded(std::size_t limit) : LimitExceeded("cycle count", limit) {}
};

class ExtenderLimitExceeded : public LimitExceeded {
 public:
  explicit ExtenderLimitExceeded(std::size_t limit) : LimitExceeded("extender count", limit) {}
};

class SearchBoundExceeded : public LimitExceeded {
 public:
  explicit SearchBoundExceeded(std::size_t limit) : LimitExceeded("search steps", limit) {}
};

}  // namespace ordlen
