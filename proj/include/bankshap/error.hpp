// Copyright 2026 The bankshap Authors
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

#ifndef BANKSHAP_ERROR_HPP
#define BANKSHAP_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bankshap {

/// Broad failure classes. The CLI maps each one to a fixed exit code.
enum class ErrorKind {
  validation,          // exit 2
  instance_too_large,  // exit 3
  io,                  // exit 4
  disagreement,        // exit 5
};

/// Base of every error thrown by the library. `code()` is a stable
/// snake_case identifier meant for machine consumption.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& code() const noexcept { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

class ValidationError : public Error {
 public:
  ValidationError(std::string code, const std::string& message)
      : Error(ErrorKind::validation, std::move(code), message) {}
};

class InstanceTooLarge : public Error {
 public:
  InstanceTooLarge(const std::string& what_limit, std::uint64_t size, std::uint64_t cap)
      : Error(ErrorKind::instance_too_large, "instance_too_large",
              what_limit + ": " + std::to_string(size) + " exceeds cap " + std::to_string(cap)),
        size_(size),
        cap_(cap) {}

  std::uint64_t size() const noexcept { return size_; }
  std::uint64_t cap() const noexcept { return cap_; }

 protected:
  InstanceTooLarge(std::string code, const std::string& message, std::uint64_t size,
                   std::uint64_t cap)
      : Error(ErrorKind::instance_too_large, std::move(code), message), size_(size), cap_(cap) {}

 private:
  std::uint64_t size_;
  std::uint64_t cap_;
};

/// Thrown by the memoised recursions when the number of stored states would
/// exceed the configured cap. `size()` is the number of states visited so far.
class MemoCapExceeded : public InstanceTooLarge {
 public:
  MemoCapExceeded(std::uint64_t states_visited, std::uint64_t cap)
      : InstanceTooLarge("memo_cap_exceeded",
                         "memo table cap " + std::to_string(cap) + " exceeded after " +
                             std::to_string(states_visited) + " states",
                         states_visited, cap) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& message) : Error(ErrorKind::io, "io_error", message) {}
};

class DisagreementError : public Error {
 public:
  explicit DisagreementError(const std::string& message)
      : Error(ErrorKind::disagreement, "method_disagreement", message) {}
};

}  // namespace bankshap

#endif  // BANKSHAP_ERROR_HPP
