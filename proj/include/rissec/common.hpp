// SPDX-License-Identifier: Apache-2.0
//
// ris-secrecy: spatial secrecy optimization for RIS-assisted MISO links
// Copyright (C) 2026 ris-secrecy developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef RISSEC_COMMON_HPP
#define RISSEC_COMMON_HPP

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace rissec
{

inline constexpr double pi = 3.14159265358979323846;

// Raised when a linear-algebra kernel fails or produces unusable output.
// The message carries enough context to identify the offending update.
class NumericalError : public std::runtime_error
{
  public:
    explicit NumericalError(const std::string &msg) : std::runtime_error(msg) {}
};

// Raised on invalid or inconsistent configuration input. Messages name the
// offending key so CLI users can fix the file directly.
class ConfigError : public std::runtime_error
{
  public:
    explicit ConfigError(const std::string &msg) : std::runtime_error(msg) {}
};

// dB <-> linear conversions happen once at configuration ingestion; all
// internal math is linear-scale.
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }
inline double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watt_to_dbm(double w) { return 10.0 * std::log10(w) + 30.0; }

// All result CSV floats are emitted with 9 significant digits.
inline std::string format_sig9(double x)
{
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.9g", x);
    return buf;
}

// Round-trip-exact formatting, used for cached matrices only.
inline std::string format_exact(double x)
{
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

} // namespace rissec

#endif
