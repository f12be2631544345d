// SPDX-License-Identifier: Apache-2.0
//
// aorsim - 3D geometric channel simulation of reception-angle statistics
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

#pragma once

#include <cstdint>
#include <random>

namespace aorsim {

// splitmix64 finalizer; used to spread seeds and derive substream keys.
inline std::uint64_t mix64(std::uint64_t z)
{
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Seeded random stream. Uniform doubles are built from the top 53 bits of a
// mt19937_64 word, so the sequence is identical on every conforming
// implementation; that is what makes outputs byte-reproducible.
class RngStream
{
  public:
    explicit RngStream(std::uint64_t seed) : engine_(seed) {}

    // Independent, reproducible substream for the (a, b, c) label under a
    // base seed. Monte Carlo runs and sweep points are keyed this way.
    static RngStream substream(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0,
                               std::uint64_t c = 0)
    {
        std::uint64_t s = mix64(base);
        s = mix64(s ^ mix64(a));
        s = mix64(s ^ mix64(b));
        s = mix64(s ^ mix64(c));
        return RngStream(s);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  private:
    std::mt19937_64 engine_;
};

} // namespace aorsim
