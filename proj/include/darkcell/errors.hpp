// Copyright 2026 the darkcell authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DARKCELL_ERRORS_HPP
#define DARKCELL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace darkcell {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

// Quadrature refinement gate failed; carries the value that was reached.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& msg, double achieved, double rel_dev)
      : Error(msg), achieved_(achieved), rel_dev_(rel_dev) {}
  double achieved() const { return achieved_; }
  double rel_deviation() const { return rel_dev_; }

 private:
  double achieved_;
  double rel_dev_;
};

class GridError : public Error {
 public:
  using Error::Error;
};

// Raised when an ODE step controller underflows (stiffness guard).
class StiffnessError : public Error {
 public:
  using Error::Error;
};

// Parameter sets handed to the invariance harness do not share the
// same dimensionless characterization.
class MismatchError : public Error {
 public:
  using Error::Error;
};

class FitError : public Error {
 public:
  using Error::Error;
};

}  // namespace darkcell

#endif  // DARKCELL_ERRORS_HPP
