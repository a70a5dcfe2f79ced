#include "ultra/space.hpp"

#include <algorithm>
#include <stdexcept>

#include "ultra/errors.hpp"

namespace ultra {

SemimetricSpace::SemimetricSpace(std::vector<std::string> labels,
                                 std::vector<std::vector<Rational>> matrix)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  if (matrix.size() != n) {
    throw AxiomViolation("distance matrix has " + std::to_string(matrix.size()) +
                         " rows for " + std::to_string(n) + " points");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (labels_[i].empty()) throw AxiomViolation("empty point label");
    if (!index_.emplace(labels_[i], i).second) {
      throw AxiomViolation("duplicate point label '" + labels_[i] + "'");
    }
    if (matrix[i].size() != n) {
      throw AxiomViolation("row '" + labels_[i] + "' has " +
                           std::to_string(matrix[i].size()) + " entries, expected " +
                           std::to_string(n));
    }
  }
  dist_.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& v = matrix[i][j];
      if (i == j && v != 0) {
        throw AxiomViolation("nonzero diagonal at '" + labels_[i] + "'");
      }
      if (i != j && v <= 0) {
        throw AxiomViolation("non-positive distance between '" + labels_[i] +
                             "' and '" + labels_[j] + "'");
      }
      if (v != matrix[j][i]) {
        throw AxiomViolation("asymmetric distance between '" + labels_[i] +
                             "' and '" + labels_[j] + "'");
      }
      dist_.push_back(v);
    }
  }
}

SemimetricSpace::SemimetricSpace(Trusted, std::vector<std::string> labels,
                                 std::vector<Rational> flat)
    : labels_(std::move(labels)), dist_(std::move(flat)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) index_.emplace(labels_[i], i);
}

std::size_t SemimetricSpace::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw UnknownPoint("unknown point '" + label + "'");
  return it->second;
}

bool SemimetricSpace::contains(const std::string& label) const {
  return index_.contains(label);
}

Rational SemimetricSpace::diameter() const {
  Rational best = 0;
  for (const auto& v : dist_) {
    if (v > best) best = v;
  }
  return best;
}

SemimetricSpace SemimetricSpace::subspace(std::span<const std::size_t> indices) const {
  std::vector<std::string> labels;
  labels.reserve(indices.size());
  for (auto i : indices) {
    if (i >= size()) throw std::out_of_range("subspace index out of range");
    labels.push_back(labels_[i]);
  }
  if (std::unordered_map<std::string, std::size_t> seen;
      std::any_of(labels.begin(), labels.end(),
                  [&](const std::string& l) { return !seen.emplace(l, 0).second; })) {
    throw std::invalid_argument("subspace indices repeat a point");
  }
  std::vector<Rational> flat;
  flat.reserve(indices.size() * indices.size());
  for (auto i : indices) {
    for (auto j : indices) flat.push_back(d(i, j));
  }
  return SemimetricSpace(Trusted{}, std::move(labels), std::move(flat));
}

bool SemimetricSpace::same_matrix(const SemimetricSpace& other) const {
  return labels_ == other.labels_ && dist_ == other.dist_;
}

bool operator==(const SemimetricSpace& a, const SemimetricSpace& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::size_t> to_b(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto it = b.index_.find(a.labels_[i]);
    if (it == b.index_.end()) return false;
    to_b[i] = it->second;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (a.d(i, j) != b.d(to_b[i], to_b[j])) return false;
    }
  }
  return true;
}

UltrametricSpace::UltrametricSpace(SemimetricSpace space)
    : SemimetricSpace(std::move(space)) {
  if (auto t = check_ultrametric(*this)) {
    throw NotUltrametric("strong triangle inequality fails on (" + label((*t)[0]) +
                         ", " + label((*t)[1]) + ", " + label((*t)[2]) + ")");
  }
}

UltrametricSpace UltrametricSpace::unchecked(SemimetricSpace space) {
  return UltrametricSpace(Trusted{}, std::move(space));
}

UltrametricSpace UltrametricSpace::subspace(std::span<const std::size_t> indices) const {
  return UltrametricSpace(Trusted{}, SemimetricSpace::subspace(indices));
}

std::optional<Triple> check_ultrametric(const SemimetricSpace& space) {
  const std::size_t n = space.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rational& a = space.d(i, j);
      for (std::size_t k = j + 1; k < n; ++k) {
        const Rational& b = space.d(i, k);
        const Rational& c = space.d(j, k);
        // Ultrametric iff the two largest sides are equal.
        const bool ok = (a == b && c <= a) || (a == c && b <= a) || (b == c && a <= b);
        if (!ok) return Triple{i, j, k};
      }
    }
  }
  return std::nullopt;
}

std::size_t Spectrum::rank_of(const Rational& value) const {
  auto it = std::lower_bound(values.begin(), values.end(), value);
  if (it == values.end() || *it != value) {
    throw std::out_of_range("value " + to_string(value) + " not in spectrum");
  }
  return static_cast<std::size_t>(it - values.begin());
}

Spectrum spectrum_of(const SemimetricSpace& space) {
  std::vector<Rational> values;
  if (space.size() > 0) values.emplace_back(0);
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = i + 1; j < space.size(); ++j) values.push_back(space.d(i, j));
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return Spectrum{std::move(values)};
}

GomoryHuMargin gomory_hu_margin(const UltrametricSpace& space) {
  GomoryHuMargin m{spectrum_of(space).size(), space.size()};
  if (m.spectrum_size > m.point_count) {
    throw InternalError("Gomory-Hu inequality violated");
  }
  return m;
}

}  // namespace ultra
