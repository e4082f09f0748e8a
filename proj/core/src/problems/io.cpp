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

#include "hops/problems/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <random>
#include <sstream>
#include <vector>

namespace hops {

namespace {

double to_double(const std::string& s, std::int64_t line) {
  double v = 0.0;
  const auto* begin = s.data();
  const auto* end = s.data() + s.size();
  // from_chars rejects an explicit plus sign, which LIBSVM labels use.
  if (begin != end && *begin == '+' && begin + 1 != end && begin[1] != '-') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("bad number '" + s + "'", line);
  }
  return v;
}

std::int64_t to_int(const std::string& s, std::int64_t line) {
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("bad integer '" + s + "'", line);
  }
  return v;
}

}  // namespace

HingeL1Instance parse_libsvm(std::istream& in, std::optional<Index> features) {
  std::vector<Eigen::Triplet<double>> entries;
  std::vector<double> labels;
  std::string line;
  std::int64_t lineno = 0;
  Index max_col = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream tokens(line);
    std::string tok;
    if (!(tokens >> tok)) continue;
    const Index row = static_cast<Index>(labels.size());
    labels.push_back(to_double(tok, lineno) > 0.0 ? 1.0 : -1.0);
    while (tokens >> tok) {
      const auto colon = tok.find(':');
      if (colon == std::string::npos) {
        throw ParseError("libsvm: expected idx:val, got '" + tok + "'", lineno);
      }
      const std::int64_t idx = to_int(tok.substr(0, colon), lineno);
      if (idx < 1) throw ParseError("libsvm: indices are 1-based", lineno);
      const double val = to_double(tok.substr(colon + 1), lineno);
      entries.emplace_back(row, static_cast<Index>(idx - 1), val);
      max_col = std::max(max_col, static_cast<Index>(idx));
    }
  }
  if (labels.empty()) throw ParseError("libsvm: no samples", lineno);
  const Index cols = features ? *features : max_col;
  if (cols < max_col) {
    throw ParseError("libsvm: feature index exceeds declared count", lineno);
  }
  HingeL1Instance out;
  out.features.resize(static_cast<Index>(labels.size()), cols);
  out.features.setFromTriplets(entries.begin(), entries.end());
  out.features.makeCompressed();
  out.labels = Eigen::Map<const Vector>(labels.data(),
                                        static_cast<Index>(labels.size()));
  return out;
}

HingeL1Instance load_libsvm(const std::string& path,
                            std::optional<Index> features) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  return parse_libsvm(in, features);
}

namespace {

// Next whitespace-delimited header token, skipping '#' comments.
std::string pgm_token(std::istream& in) {
  std::string tok;
  char c = 0;
  while (in.get(c)) {
    if (c == '#') {
      std::string rest;
      std::getline(in, rest);
      if (!tok.empty()) break;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!tok.empty()) break;
      continue;
    }
    tok.push_back(c);
  }
  if (tok.empty()) throw ParseError("pgm: truncated header", 1);
  return tok;
}

}  // namespace

GrayImage parse_pgm(std::istream& in) {
  const std::string magic = pgm_token(in);
  if (magic != "P2" && magic != "P5") {
    throw ParseError("pgm: bad magic number '" + magic + "'", 1);
  }
  const std::int64_t cols = to_int(pgm_token(in), 1);
  const std::int64_t rows = to_int(pgm_token(in), 1);
  const std::int64_t maxval = to_int(pgm_token(in), 1);
  if (cols < 1 || rows < 1 || maxval < 1 || maxval > 65535) {
    throw ParseError("pgm: bad dimensions or maxval", 1);
  }
  GrayImage img;
  img.rows = rows;
  img.cols = cols;
  img.pixels.resize(rows * cols);
  const double scale = 1.0 / static_cast<double>(maxval);
  if (magic == "P2") {
    for (Index p = 0; p < img.pixels.size(); ++p) {
      std::string tok;
      if (!(in >> tok)) throw ParseError("pgm: too few pixels", 2);
      const std::int64_t v = to_int(tok, 2);
      if (v < 0 || v > maxval) throw ParseError("pgm: pixel out of range", 2);
      img.pixels[p] = static_cast<double>(v) * scale;
    }
    return img;
  }
  const int bytes = maxval < 256 ? 1 : 2;
  std::vector<unsigned char> raw(
      static_cast<std::size_t>(rows * cols * bytes));
  in.read(reinterpret_cast<char*>(raw.data()),
          static_cast<std::streamsize>(raw.size()));
  if (in.gcount() != static_cast<std::streamsize>(raw.size())) {
    throw ParseError("pgm: truncated pixel data", 2);
  }
  for (Index p = 0; p < img.pixels.size(); ++p) {
    const auto i = static_cast<std::size_t>(p * bytes);
    const unsigned v = bytes == 1 ? raw[i] : (raw[i] << 8U) | raw[i + 1];
    img.pixels[p] = static_cast<double>(v) * scale;
  }
  return img;
}

GrayImage load_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path, 0);
  return parse_pgm(in);
}

GrayImage crop(const GrayImage& image, Index row0, Index col0, Index rows,
               Index cols) {
  require(row0 >= 0 && col0 >= 0 && rows > 0 && cols > 0 &&
              row0 + rows <= image.rows && col0 + cols <= image.cols,
          "crop: window outside the image");
  GrayImage out;
  out.rows = rows;
  out.cols = cols;
  out.pixels.resize(rows * cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      out.pixels[i * cols + j] = image.pixels[(row0 + i) * image.cols + col0 + j];
    }
  }
  return out;
}

Vector add_gaussian_noise(const Vector& x, double sd, std::uint64_t seed) {
  require(sd >= 0.0, "noise: sd must be >= 0");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, sd);
  Vector out = x;
  if (sd == 0.0) return out;
  for (Index i = 0; i < out.size(); ++i) out[i] += normal(rng);
  return out;
}

RofInstance make_rof_instance(const GrayImage& clean, double lambda,
                              double noise_sd, std::uint64_t seed) {
  RofInstance out;
  out.rows = clean.rows;
  out.cols = clean.cols;
  out.noisy = add_gaussian_noise(clean.pixels, noise_sd, seed);
  out.lambda = lambda;
  return out;
}

HingeL1Instance generate_sparse_classification(
    const SyntheticClassificationSpec& spec, std::uint64_t seed) {
  require(spec.samples > 0 && spec.features > 0,
          "synthetic classification: empty shape");
  require(spec.density > 0.0 && spec.density <= 1.0,
          "synthetic classification: density outside (0, 1]");
  require(spec.positive_fraction > 0.0 && spec.positive_fraction < 1.0,
          "synthetic classification: positive fraction outside (0, 1)");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::normal_distribution<double> normal(0.0, 1.0);

  // Feature frequencies follow a decaying profile normalized to the
  // requested mean density, like bag-of-words style binary data.
  Vector freq(spec.features);
  for (Index j = 0; j < spec.features; ++j) {
    freq[j] = 1.0 / std::sqrt(1.0 + static_cast<double>(j));
  }
  freq *= spec.density * static_cast<double>(spec.features) / freq.sum();
  freq = freq.cwiseMin(0.9);

  Vector rule = Vector::Zero(spec.features);
  for (Index j = 0; j < spec.features; ++j) {
    if (uniform(rng) < 0.1) rule[j] = normal(rng);
  }

  std::vector<Eigen::Triplet<double>> entries;
  Vector score(spec.samples);
  for (Index i = 0; i < spec.samples; ++i) {
    double s = 0.0;
    for (Index j = 0; j < spec.features; ++j) {
      if (uniform(rng) < freq[j]) {
        entries.emplace_back(i, j, 1.0);
        s += rule[j];
      }
    }
    score[i] = s + 0.1 * normal(rng);
  }
  std::vector<double> sorted(score.data(), score.data() + score.size());
  const auto k = static_cast<std::size_t>(
      std::max<double>(1.0, std::floor(spec.positive_fraction *
                                       static_cast<double>(spec.samples))));
  std::nth_element(sorted.begin(), sorted.end() - static_cast<std::ptrdiff_t>(k),
                   sorted.end());
  const double cut = *(sorted.end() - static_cast<std::ptrdiff_t>(k));

  HingeL1Instance out;
  out.features.resize(spec.samples, spec.features);
  out.features.setFromTriplets(entries.begin(), entries.end());
  out.features.makeCompressed();
  out.labels.resize(spec.samples);
  for (Index i = 0; i < spec.samples; ++i) {
    double y = score[i] >= cut ? 1.0 : -1.0;
    if (uniform(rng) < spec.label_noise) y = -y;
    out.labels[i] = y;
  }
  return out;
}

HingeL1Instance load_w1a_or_synthetic(std::uint64_t seed, bool* used_file) {
  if (const char* path = std::getenv("HOPS_W1A_PATH"); path && *path) {
    if (used_file) *used_file = true;
    return load_libsvm(path, 300);
  }
  if (used_file) *used_file = false;
  return generate_sparse_classification({}, seed);
}

}  // namespace hops
