#pragma once

#include <stdexcept>
#include <string>

#include "nctree/geom_kernel.hpp"

namespace nctree {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInstance : public Error {
 public:
  using Error::Error;
};

class GeneralPositionError : public Error {
 public:
  GeneralPositionError(const std::string& what, PositionViolation v) : Error(what), violation_(v) {}
  const PositionViolation& violation() const { return violation_; }

 private:
  PositionViolation violation_;
};

class InfeasibleInstance : public Error {
 public:
  using Error::Error;
};

class IterationCapExceeded : public Error {
 public:
  using Error::Error;
};

class OracleSizeExceeded : public Error {
 public:
  using Error::Error;
};

inline std::string describe(const PositionViolation& v) {
  using K = PositionViolation::Kind;
  if (v.kind == K::Duplicate)
    return "duplicate points " + std::to_string(v.indices[0]) + " and " + std::to_string(v.indices[1]);
  return "collinear points " + std::to_string(v.indices[0]) + ", " + std::to_string(v.indices[1]) +
         ", " + std::to_string(v.indices[2]);
}

}  // namespace nctree
