#include "ultra/census.hpp"

#include <algorithm>
#include <memory>
#include <thread>

#include "ultra/errors.hpp"
#include "ultra/reptree.hpp"

namespace ultra {
namespace {

BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

// Binary tree with integer labels; leaves have label 0.
struct Shape {
  int label = 0;
  std::shared_ptr<const Shape> left, right;
};
using ShapePtr = std::shared_ptr<const Shape>;

const ShapePtr& leaf() {
  static const ShapePtr l = std::make_shared<Shape>();
  return l;
}

// All k-subsets of `pool` (sorted) in lexicographic order.
std::vector<std::vector<int>> subsets(const std::vector<int>& pool, std::size_t k) {
  std::vector<std::vector<int>> out;
  if (k > pool.size()) return out;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    std::vector<int> s;
    for (auto i : pick) s.push_back(pool[i]);
    out.push_back(std::move(s));
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == pool.size() - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

struct Split {
  int top;
  std::vector<int> first;   // carries the smallest value
  std::vector<int> second;
};

// Top-level choices for the nonzero spectrum `values` (ascending, size >= 2):
// the diameter joins a part holding min(values) plus a subset of the middle
// values, and a part holding the rest.
std::vector<Split> splits(const std::vector<int>& values) {
  const int top = values.back();
  const int low = values.front();
  std::vector<int> middle(values.begin() + 1, values.end() - 1);
  std::vector<Split> out;
  for (std::size_t extra = 0; extra <= middle.size(); ++extra) {
    for (auto& chosen : subsets(middle, extra)) {
      Split s{top, {low}, {}};
      s.first.insert(s.first.end(), chosen.begin(), chosen.end());
      std::set_difference(middle.begin(), middle.end(), chosen.begin(), chosen.end(),
                          std::back_inserter(s.second));
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<ShapePtr> generate(const std::vector<int>& values);

std::vector<ShapePtr> generate_split(const Split& s) {
  std::vector<ShapePtr> out;
  const auto lefts = generate(s.first);
  const auto rights = generate(s.second);
  for (const auto& a : lefts) {
    for (const auto& b : rights) {
      out.push_back(std::make_shared<Shape>(Shape{s.top, a, b}));
    }
  }
  return out;
}

std::vector<ShapePtr> generate(const std::vector<int>& values) {
  if (values.empty()) return {leaf()};
  if (values.size() == 1) {
    return {std::make_shared<Shape>(Shape{values.front(), leaf(), leaf()})};
  }
  std::vector<ShapePtr> out;
  for (const auto& s : splits(values)) {
    auto part = generate_split(s);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

UltrametricSpace to_space(const Shape& shape, std::size_t n) {
  std::vector<RepTree::Node> nodes;
  std::size_t next_point = 0;
  auto add = [&](auto&& self, const Shape& s) -> std::size_t {
    const std::size_t v = nodes.size();
    nodes.emplace_back();
    if (!s.left) {
      nodes[v].point = next_point++;
      return v;
    }
    nodes[v].label = s.label;
    const auto l = self(self, *s.left);
    const auto r = self(self, *s.right);
    nodes[v].children = {l, r};
    return v;
  };
  add(add, shape);

  std::vector<std::string> tmp(n);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = std::to_string(i);
  const RepTree draft(tmp, nodes, 0);
  const auto order = canonical_leaf_order(draft, CodeMode::isometry);
  std::vector<std::string> names(n);
  for (std::size_t pos = 0; pos < n; ++pos) names[order[pos]] = "p" + std::to_string(pos + 1);

  // Re-emit with points indexed by canonical position.
  const UltrametricSpace drafted = realize(RepTree(names, std::move(nodes), 0));
  std::vector<std::size_t> by_name(n);
  for (std::size_t pos = 0; pos < n; ++pos) by_name[pos] = order[pos];
  return drafted.subspace(by_name);
}

}  // namespace

BigInt kappa(std::size_t n) {
  if (n == 0) return 0;
  std::vector<BigInt> k(std::max<std::size_t>(n + 1, 3));
  k[1] = 1;
  k[2] = 1;
  for (std::size_t m = 3; m <= n; ++m) {
    BigInt sum = 0;
    for (std::size_t j = 2; j <= m - 1; ++j) sum += binomial(m - 3, j - 2) * k[j] * k[m - j];
    k[m] = sum;
  }
  return k[n];
}

std::vector<UltrametricSpace> enumerate_extremal(std::size_t n,
                                                 const EnumerationOptions& options) {
  if (n == 0) throw TooSmall("enumeration needs n >= 1");
  if (n > options.max_n) {
    throw Oversize("n = " + std::to_string(n) + " exceeds the enumeration limit " +
                   std::to_string(options.max_n));
  }
  std::vector<int> values;
  for (int v = 1; v < static_cast<int>(n); ++v) values.push_back(v);

  std::vector<ShapePtr> shapes;
  if (values.size() < 2) {
    shapes = generate(values);
  } else {
    const auto tasks = splits(values);
    std::vector<std::vector<ShapePtr>> results(tasks.size());
    const std::size_t jobs = std::clamp<std::size_t>(options.jobs, 1, tasks.size());
    std::vector<std::thread> workers;
    for (std::size_t w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        for (std::size_t t = w; t < tasks.size(); t += jobs) results[t] = generate_split(tasks[t]);
      });
    }
    for (auto& t : workers) t.join();
    for (auto& r : results) shapes.insert(shapes.end(), r.begin(), r.end());
  }

  std::vector<std::pair<CanonicalCode, UltrametricSpace>> keyed;
  keyed.reserve(shapes.size());
  for (const auto& s : shapes) {
    UltrametricSpace space = to_space(*s, n);
    keyed.emplace_back(canonical_code(build_representing_tree(space), CodeMode::isometry),
                       std::move(space));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<UltrametricSpace> out;
  out.reserve(keyed.size());
  for (auto& [code, space] : keyed) out.push_back(std::move(space));
  return out;
}

}  // namespace ultra
