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

#ifndef RISSEC_RNG_HPP
#define RISSEC_RNG_HPP

#include <complex>
#include <cstdint>
#include <random>

namespace rissec
{

// Splittable random stream. Identical seeds reproduce identical draw
// sequences, and substream(id) derives decorrelated child streams, so
// Monte-Carlo work items can be keyed by logical index (trial, cell, ...)
// and give the same draws for any worker count.
class RngStream
{
  public:
    explicit RngStream(std::uint64_t seed) : seed_(seed), gen_(mix(seed ^ 0x6A09E667F3BCC909ULL)) {}

    std::uint64_t seed() const { return seed_; }

    RngStream substream(std::uint64_t id) const
    {
        return RngStream(mix(seed_ + 0x9E3779B97F4A7C15ULL * (id + 1)));
    }

    // Uniform on [0, 1), 53-bit resolution.
    double uniform()
    {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller; pairs are cached so the draw order is
    // part of the reproducibility contract.
    double normal()
    {
        if (has_spare_)
        {
            has_spare_ = false;
            return spare_;
        }
        double u1 = 1.0 - uniform(); // (0, 1], keeps log() finite
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    // Circularly-symmetric complex normal CN(0,1): unit total variance.
    std::complex<double> complex_normal()
    {
        double re = normal();
        double im = normal();
        return {re * 0.7071067811865476, im * 0.7071067811865476};
    }

  private:
    static std::uint64_t mix(std::uint64_t z)
    {
        // splitmix64 finalizer
        z += 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace rissec

#endif
