#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ultra/rational.hpp"

namespace ultra {

/// Finite semimetric space: labeled points with an exact symmetric distance
/// matrix, zero on the diagonal and strictly positive elsewhere. Point
/// indices follow construction order and serve as the tie-break order in
/// every algorithm of the library.
class SemimetricSpace {
 public:
  /// Validates the axioms; throws AxiomViolation.
  SemimetricSpace(std::vector<std::string> labels,
                  std::vector<std::vector<Rational>> matrix);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }

  /// Throws UnknownPoint.
  std::size_t index_of(const std::string& label) const;
  bool contains(const std::string& label) const;

  const Rational& d(std::size_t i, std::size_t j) const {
    return dist_[i * labels_.size() + j];
  }

  /// The largest distance, 0 for a one-point space.
  Rational diameter() const;

  /// Restriction to the given indices, in the given order.
  SemimetricSpace subspace(std::span<const std::size_t> indices) const;

  /// Positional equality: same label sequence and same matrix.
  bool same_matrix(const SemimetricSpace& other) const;

  /// Label-keyed equality: same label set and d(x,y) agrees for every pair
  /// of labels, independent of point order.
  friend bool operator==(const SemimetricSpace& a, const SemimetricSpace& b);

 protected:
  struct Trusted {};
  SemimetricSpace(Trusted, std::vector<std::string> labels,
                  std::vector<Rational> flat);

 private:
  std::vector<std::string> labels_;
  std::vector<Rational> dist_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// A semimetric space satisfying the strong triangle inequality.
class UltrametricSpace : public SemimetricSpace {
 public:
  /// Throws NotUltrametric when some triple violates the strong triangle
  /// inequality.
  explicit UltrametricSpace(SemimetricSpace space);

  UltrametricSpace(std::vector<std::string> labels,
                   std::vector<std::vector<Rational>> matrix)
      : UltrametricSpace(SemimetricSpace(std::move(labels), std::move(matrix))) {}

  /// Wraps a space already known to be ultrametric by construction, e.g.
  /// one realized from a representing tree. Skips the O(n^3) check.
  static UltrametricSpace unchecked(SemimetricSpace space);

  UltrametricSpace subspace(std::span<const std::size_t> indices) const;

 private:
  UltrametricSpace(Trusted, SemimetricSpace space)
      : SemimetricSpace(std::move(space)) {}
};

/// Index triple i < j < k in which one side exceeds the max of the others.
using Triple = std::array<std::size_t, 3>;

/// nullopt when the space is ultrametric, otherwise the lexicographically
/// first violating triple.
std::optional<Triple> check_ultrametric(const SemimetricSpace& space);

/// Strictly increasing distinct distance values, starting with 0.
struct Spectrum {
  std::vector<Rational> values;

  std::size_t size() const { return values.size(); }
  /// Position of `value` in the sorted list; throws std::out_of_range.
  std::size_t rank_of(const Rational& value) const;
  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

Spectrum spectrum_of(const SemimetricSpace& space);

struct GomoryHuMargin {
  std::size_t spectrum_size;
  std::size_t point_count;
};

/// (|Sp X|, |X|). The first never exceeds the second.
GomoryHuMargin gomory_hu_margin(const UltrametricSpace& space);

}  // namespace ultra
