// Copyright 2026 The monomat Authors
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

#ifndef MONOMAT_RNG_H
#define MONOMAT_RNG_H

#include <array>
#include <complex>
#include <cstdint>

namespace monomat {

/// Philox4x32-10 block function (Salmon et al., SC'11).
std::array<uint32_t, 4> philox4x32_10(std::array<uint32_t, 4> counter, std::array<uint32_t, 2> key);

/// Sequential view of one Philox stream. The key is the master seed; the
/// upper half of the counter holds the stream id, the lower half counts
/// blocks. Distinct stream ids never share a block.
class RandomStream {
   public:
    RandomStream(uint64_t seed, uint64_t stream_id);

    uint32_t next_u32();
    uint64_t next_u64();
    /// Uniform on the open interval (0, 1) with 53-bit resolution.
    double uniform();
    /// Standard complex Gaussian, E|z|^2 = 1, by Box-Muller.
    std::complex<double> complex_gaussian();

   private:
    void refill();

    std::array<uint32_t, 2> key_;
    uint64_t stream_;
    uint64_t block_ = 0;
    std::array<uint32_t, 4> buffer_{};
    int used_ = 4;
};

/// Stream id for a (dimension, trial) pair.
uint64_t trial_stream_id(uint64_t n, uint64_t trial);

}  // namespace monomat

#endif
