/*
Copyright (c) 2026 The slfe authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace slfe {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text/bytes (bad token, bad line).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Structurally invalid data (out-of-range endpoint, truncated file).
class FormatError : public Error {
 public:
  using Error::Error;
};

// Value outside the mathematical domain (negative weight, bad probabilities).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Invalid argument to an API call (bad vertex id).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// API misuse (ruler regression, mismatched compare configs).
class UsageError : public Error {
 public:
  using Error::Error;
};

// Guidance file does not match the graph it is applied to.
class StaleGuidanceError : public Error {
 public:
  using Error::Error;
};

// Safety valve: iteration cap exceeded.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace slfe
