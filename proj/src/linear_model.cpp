/*
 * Copyright 2026 The subseg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <string>

#include "subseg/error.hpp"
#include "subseg/segmenters.hpp"

namespace subseg {

std::int64_t LinearSegmenterModel::find(const std::string& feature) const {
  auto it = index_.find(feature);
  return it == index_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

std::size_t LinearSegmenterModel::intern(const std::string& feature) {
  auto [it, inserted] = index_.try_emplace(feature, names_.size());
  if (inserted) {
    names_.push_back(feature);
    weights_.push_back(LabelWeights{});
  }
  return it->second;
}

LabelWeights LinearSegmenterModel::score(const std::vector<std::string>& features) const {
  LabelWeights total{};
  for (const auto& f : features) {
    const auto id = find(f);
    if (id < 0) continue;
    const auto& w = weights_[static_cast<std::size_t>(id)];
    for (std::size_t k = 0; k < kNumLabels; ++k) total[k] += w[k];
  }
  return total;
}

namespace {

constexpr std::string_view kMagic = "subseg-linear-model";
constexpr std::array<std::string_view, kNumLabels> kLabelKeys = {"none", "eol", "eob"};

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

template <class T>
T parse_number(std::string_view s, std::size_t line) {
  T v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ModelFormatError("model line " + std::to_string(line) + ": bad number '" + std::string(s) + "'");
  return v;
}

}  // namespace

void LinearSegmenterModel::save(std::ostream& os) const {
  os << "format\t" << kMagic << '\n'
     << "version\t" << kModelFormatVersion << '\n'
     << "epochs\t" << meta.epochs << '\n'
     << "learning_rate\t" << format_double(meta.learning_rate) << '\n'
     << "seed\t" << meta.seed << '\n'
     << "fine_tuned\t" << (meta.fine_tuned ? 1 : 0) << '\n'
     << "fine_tune_epochs\t" << meta.fine_tune_epochs << '\n'
     << "cpl_limit\t" << meta.cpl_limit << '\n'
     << "weights\n";
  // Sorted so equal models serialize identically.
  std::map<std::string_view, std::size_t> order;
  for (std::size_t i = 0; i < names_.size(); ++i) order.emplace(names_[i], i);
  for (const auto& [name, id] : order) {
    for (std::size_t k = 0; k < kNumLabels; ++k) {
      if (weights_[id][k] == 0.0) continue;
      os << name << '\t' << kLabelKeys[k] << '\t' << format_double(weights_[id][k]) << '\n';
    }
  }
}

LinearSegmenterModel LinearSegmenterModel::load(std::istream& is) {
  LinearSegmenterModel model;
  std::string line;
  std::size_t line_no = 0;
  bool in_weights = false;
  bool saw_magic = false;
  bool saw_version = false;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!in_weights) {
      if (line == "weights") {
        if (!saw_magic || !saw_version) throw ModelFormatError("model header incomplete");
        in_weights = true;
        continue;
      }
      const auto tab = line.find('\t');
      if (tab == std::string::npos)
        throw ModelFormatError("model line " + std::to_string(line_no) + ": expected key<TAB>value");
      const std::string key = line.substr(0, tab);
      const std::string_view value = std::string_view(line).substr(tab + 1);
      if (key == "format") {
        if (value != kMagic) throw ModelFormatError("not a subseg model file");
        saw_magic = true;
      } else if (key == "version") {
        const int v = parse_number<int>(value, line_no);
        if (v != kModelFormatVersion)
          throw ModelFormatError("unsupported model format version " + std::to_string(v));
        saw_version = true;
      } else if (key == "epochs") {
        model.meta.epochs = parse_number<std::size_t>(value, line_no);
      } else if (key == "learning_rate") {
        model.meta.learning_rate = parse_number<double>(value, line_no);
      } else if (key == "seed") {
        model.meta.seed = parse_number<std::uint64_t>(value, line_no);
      } else if (key == "fine_tuned") {
        model.meta.fine_tuned = parse_number<int>(value, line_no) != 0;
      } else if (key == "fine_tune_epochs") {
        model.meta.fine_tune_epochs = parse_number<std::size_t>(value, line_no);
      } else if (key == "cpl_limit") {
        model.meta.cpl_limit = parse_number<std::size_t>(value, line_no);
      } else {
        throw ModelFormatError("model line " + std::to_string(line_no) + ": unknown key " + key);
      }
      continue;
    }
    const auto t1 = line.find('\t');
    const auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string::npos)
      throw ModelFormatError("model line " + std::to_string(line_no) + ": expected feature<TAB>label<TAB>weight");
    const std::string feature = line.substr(0, t1);
    const std::string_view label = std::string_view(line).substr(t1 + 1, t2 - t1 - 1);
    std::size_t k = 0;
    while (k < kNumLabels && kLabelKeys[k] != label) ++k;
    if (k == kNumLabels)
      throw ModelFormatError("model line " + std::to_string(line_no) + ": unknown label");
    const double w = parse_number<double>(std::string_view(line).substr(t2 + 1), line_no);
    if (!std::isfinite(w))
      throw ModelFormatError("model line " + std::to_string(line_no) + ": non-finite weight");
    model.weights_[model.intern(feature)][k] = w;
  }
  if (!in_weights) throw ModelFormatError("model file has no weights section");
  return model;
}

bool LinearSegmenterModel::same_weights(const LinearSegmenterModel& other, double tolerance) const {
  auto covered = [tolerance](const LinearSegmenterModel& a, const LinearSegmenterModel& b) {
    for (std::size_t i = 0; i < a.names_.size(); ++i) {
      const auto j = b.find(a.names_[i]);
      for (std::size_t k = 0; k < kNumLabels; ++k) {
        const double wb = j < 0 ? 0.0 : b.weights_[static_cast<std::size_t>(j)][k];
        if (std::abs(a.weights_[i][k] - wb) > tolerance) return false;
      }
    }
    return true;
  };
  return covered(*this, other) && covered(other, *this);
}

}  // namespace subseg
