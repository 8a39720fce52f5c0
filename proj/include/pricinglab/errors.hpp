#pragma once
//------------------------------------------------------------------------------
//
//   Copyright 2026 PricingLab developers
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include <stdexcept>
#include <string>

namespace pricinglab {

/// Library-wide exception. The kind distinguishes caller mistakes, malformed
/// input text, and model-level infeasibility (e.g. a prior whose tail is too
/// light for the requested mechanism).
class Error : public std::runtime_error {
 public:
  enum class Kind { invalid_argument, parse, infeasible, numeric };

  Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

[[noreturn]] inline void throw_invalid(const std::string& msg) {
  throw Error(Error::Kind::invalid_argument, msg);
}
[[noreturn]] inline void throw_parse(const std::string& msg) {
  throw Error(Error::Kind::parse, msg);
}
[[noreturn]] inline void throw_infeasible(const std::string& msg) {
  throw Error(Error::Kind::infeasible, msg);
}
[[noreturn]] inline void throw_numeric(const std::string& msg) {
  throw Error(Error::Kind::numeric, msg);
}

}  // namespace pricinglab
