// Copyright 2026 The hops Authors
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

// Dataset ingestion and synthetic data for the instance builders.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "hops/problems/hinge_l1.hpp"
#include "hops/problems/rof.hpp"

namespace hops {

/// "label idx:val idx:val ..." lines with 1-based indices. Positive labels
/// map to +1, everything else to -1. `features` pads the column count (w1a
/// declares 300 even if the last columns are empty). Throws ParseError.
HingeL1Instance parse_libsvm(std::istream& in,
                             std::optional<Index> features = std::nullopt);
HingeL1Instance load_libsvm(const std::string& path,
                            std::optional<Index> features = std::nullopt);

struct GrayImage {
  Index rows = 0;
  Index cols = 0;
  Vector pixels;  // row-major, in [0, 1]
};

/// P2 (ASCII) or P5 (binary, 8 or 16 bit) grayscale. Throws ParseError.
GrayImage parse_pgm(std::istream& in);
GrayImage load_pgm(const std::string& path);

GrayImage crop(const GrayImage& image, Index row0, Index col0, Index rows,
               Index cols);

/// x + N(0, sd^2) per entry, seeded.
Vector add_gaussian_noise(const Vector& x, double sd, std::uint64_t seed);

/// Noisy ROF instance from a clean image (sd = 0.05 by default).
RofInstance make_rof_instance(const GrayImage& clean, double lambda = 20.0,
                              double noise_sd = 0.05, std::uint64_t seed = 0);

struct SyntheticClassificationSpec {
  Index samples = 2477;
  Index features = 300;
  double density = 0.04;         // fraction of nonzero (binary) features
  double positive_fraction = 0.03;
  double label_noise = 0.01;
};

/// Binary sparse features with the shape of the a1a..w8a family; labels come
/// from a sparse linear rule thresholded to the requested positive rate,
/// then flipped with probability label_noise.
HingeL1Instance generate_sparse_classification(
    const SyntheticClassificationSpec& spec, std::uint64_t seed);

/// Loads the LIBSVM file at $HOPS_W1A_PATH when set, otherwise returns the
/// seeded synthetic stand-in of the same shape.
HingeL1Instance load_w1a_or_synthetic(std::uint64_t seed,
                                      bool* used_file = nullptr);

}  // namespace hops
