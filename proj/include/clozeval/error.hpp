// Copyright 2026 The clozeval Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace clozeval {

// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or invalid input data (corpus, annotations, config files).
// `line` is 1-based; 0 means the error is not tied to a line.
class InputError : public Error {
 public:
  InputError(const std::string& what, std::string path = {}, std::size_t line = 0,
             std::string field = {})
      : Error(what), path_(std::move(path)), line_(line), field_(std::move(field)) {}

  const std::string& path() const noexcept { return path_; }
  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::string path_;
  std::size_t line_;
  std::string field_;
};

enum class BackendErrorKind {
  kValidation,    // malformed query (bad mask positions, empty text)
  kOverLength,    // input exceeds the model's max sequence length
  kUnknownModel,  // model id not served by the backend
  kTransport,     // network / HTTP failure after retries were exhausted
  kProtocol,      // response did not match the wire contract
};

const char* to_string(BackendErrorKind kind) noexcept;

class BackendError : public Error {
 public:
  BackendError(BackendErrorKind kind, const std::string& what) : Error(what), kind_(kind) {}
  BackendErrorKind kind() const noexcept { return kind_; }

 private:
  BackendErrorKind kind_;
};

// Raised when retries of a transient transport failure are exhausted.
class RetriesExhaustedError : public BackendError {
 public:
  RetriesExhaustedError(const std::string& what, int attempts)
      : BackendError(BackendErrorKind::kTransport, what), attempts_(attempts) {}
  int attempts() const noexcept { return attempts_; }

 private:
  int attempts_;
};

// Raised by classify_tokens when the continuation convention is violated.
class TokenizationError : public Error {
 public:
  using Error::Error;
};

// A document with no maskable token under the given configuration.
class UnmaskableDocumentError : public Error {
 public:
  using Error::Error;
};

// Statistics on degenerate input (constant vectors, too few samples).
class StatisticsError : public Error {
 public:
  using Error::Error;
};

}  // namespace clozeval
