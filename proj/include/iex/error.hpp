// Copyright 2026 The Authors.
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

#ifndef IEX_ERROR_HPP
#define IEX_ERROR_HPP

#include <stdexcept>
#include <string>

namespace iex {

enum class ErrorKind {
  kStructural,  // malformed or inconsistent inputs
  kCapacity,    // instance too large for an exact/exhaustive routine
  kConfig,      // unsupported parameter value
  kParse,       // bad scenario document
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void throw_structural(const std::string& what) {
  throw Error(ErrorKind::kStructural, what);
}

}  // namespace iex

#endif  // IEX_ERROR_HPP
