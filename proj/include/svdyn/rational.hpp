// rational.hpp
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SVDYN_RATIONAL_HPP_
#define SVDYN_RATIONAL_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace svdyn {

/// Exact arbitrary-precision rational, always in canonical reduced form
/// with positive denominator.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

/// Thrown on any malformed input or violated precondition.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

/// Parses "p/q", an integer, or a decimal string ("0.25") exactly.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw input_error("empty rational literal");
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den))
      throw input_error("malformed rational '" + s + "'");
    Int q(den);
    if (q == 0) throw input_error("zero denominator in '" + s + "'");
    return Rat(Int(num), q);
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    bool neg = !whole.empty() && whole[0] == '-';
    if (whole == "-" || whole == "+" || whole.empty()) whole += "0";
    if (!is_int(whole) || frac.empty())
      throw input_error("malformed decimal '" + s + "'");
    for (char c : frac)
      if (c < '0' || c > '9') throw input_error("malformed decimal '" + s + "'");
    Int scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Rat r = Rat(Int(whole)) + (neg ? Rat(-Int(frac), scale) : Rat(Int(frac), scale));
    return r;
  }
  if (!is_int(s)) throw input_error("malformed rational '" + s + "'");
  return Rat(Int(s));
}

/// Canonical serialization: "p" for integers, "p/q" otherwise.
inline std::string rat_str(const Rat& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

}  // namespace svdyn

#endif  // SVDYN_RATIONAL_HPP_
