// Copyright 2026 The negaffect Authors.
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

#ifndef NEGAFFECT_COMMON_HPP_
#define NEGAFFECT_COMMON_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace negaffect {

// Input violates a schema or a domain invariant. The CLI maps this to exit
// code 1.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A file could not be opened, read or written. The CLI maps this to exit
// code 2.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Presence : std::uint8_t { kPresent, kMissing, kExcluded };

// A value that is either present, missing from the source, or excluded by an
// exclusion policy. Excluded values keep the original value for reporting
// but read as absent everywhere else.
template <typename T>
class Field {
 public:
  Field() = default;
  Field(T value) : value_(std::move(value)), presence_(Presence::kPresent) {}

  static Field Missing() { return Field(); }

  bool present() const { return presence_ == Presence::kPresent; }
  Presence presence() const { return presence_; }

  const T& value() const {
    if (!present()) throw std::logic_error("Field::value() on absent field");
    return value_;
  }
  // The stored value regardless of presence; meaningful for kExcluded.
  const T& raw() const { return value_; }

  void Exclude() {
    if (presence_ == Presence::kPresent) presence_ = Presence::kExcluded;
  }

  friend bool operator==(const Field& a, const Field& b) {
    if (a.presence_ != b.presence_) return false;
    return a.presence_ == Presence::kMissing || a.value_ == b.value_;
  }

 private:
  T value_{};
  Presence presence_ = Presence::kMissing;
};

}  // namespace negaffect

#endif  // NEGAFFECT_COMMON_HPP_
