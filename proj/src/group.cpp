#include "qtg/group.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qtg {

Permutation::Permutation(std::vector<int> mapping) : mapping_(std::move(mapping)) {
  std::vector<bool> seen(mapping_.size(), false);
  for (int image : mapping_) {
    if (image < 0 || image >= size() || seen[static_cast<size_t>(image)]) {
      throw Error("permutation mapping is not a bijection");
    }
    seen[static_cast<size_t>(image)] = true;
  }
}

Permutation Permutation::identity(int size) {
  std::vector<int> mapping(static_cast<size_t>(size));
  for (int i = 0; i < size; ++i) mapping[static_cast<size_t>(i)] = i;
  return Permutation(std::move(mapping));
}

Permutation Permutation::after(const Permutation& b) const {
  if (size() != b.size()) throw CarrierMismatch("composing permutations of different sizes");
  std::vector<int> mapping(mapping_.size());
  for (int i = 0; i < size(); ++i) mapping[static_cast<size_t>(i)] = (*this)(b(i));
  return Permutation(std::move(mapping));
}

Permutation Permutation::inverse() const {
  std::vector<int> mapping(mapping_.size());
  for (int i = 0; i < size(); ++i) mapping[static_cast<size_t>((*this)(i))] = i;
  return Permutation(std::move(mapping));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i) {
    if ((*this)(i) != i) return false;
  }
  return true;
}

FiniteGroup FiniteGroup::close(std::vector<Permutation> generators) {
  if (generators.empty()) throw Error("closure needs at least one generator");
  const int n = generators.front().size();
  for (const auto& g : generators) {
    if (g.size() != n) throw CarrierMismatch("generators act on carriers of different sizes");
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

  FiniteGroup group;
  group.carrier_size_ = n;
  group.elements_.push_back(Permutation::identity(n));
  std::map<std::vector<int>, int> index = {{group.elements_.front().mapping(), 0}};

  // Work-queue product saturation: discovery order is deterministic because
  // the generator list is sorted.
  for (size_t at = 0; at < group.elements_.size(); ++at) {
    for (const auto& g : generators) {
      Permutation next = group.elements_[at].after(g);
      if (index.emplace(next.mapping(), group.elements_.size()).second) {
        group.elements_.push_back(std::move(next));
      }
    }
  }

  const int order = group.order();
  group.cayley_.assign(static_cast<size_t>(order), std::vector<int>(static_cast<size_t>(order)));
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      const auto product = group.elements_[static_cast<size_t>(a)]
                               .after(group.elements_[static_cast<size_t>(b)]);
      group.cayley_[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          index.at(product.mapping());
    }
  }
  return group;
}

const Permutation& FiniteGroup::element(int i) const {
  if (i < 0 || i >= order()) throw NotAnElement("element index out of range");
  return elements_[static_cast<size_t>(i)];
}

int FiniteGroup::index_of(const Permutation& p) const {
  for (int i = 0; i < order(); ++i) {
    if (elements_[static_cast<size_t>(i)] == p) return i;
  }
  return -1;
}

int FiniteGroup::compose(int a, int b) const {
  element(a);
  element(b);
  return cayley_[static_cast<size_t>(a)][static_cast<size_t>(b)];
}

int FiniteGroup::inverse_of(int a) const {
  element(a);
  for (int b = 0; b < order(); ++b) {
    if (compose(a, b) == identity_index()) return b;
  }
  throw Error("element without inverse; group is corrupt");
}

int FiniteGroup::element_order(int a) const {
  element(a);
  int k = 1;
  for (int cur = a; cur != identity_index(); ++k) cur = compose(cur, a);
  return k;
}

int FiniteGroup::element_order(const Permutation& p) const {
  const int i = index_of(p);
  if (i < 0) throw NotAnElement("permutation is not an element of the group");
  return element_order(i);
}

std::vector<std::vector<int>> FiniteGroup::orbits() const {
  std::vector<bool> done(static_cast<size_t>(carrier_size_), false);
  std::vector<std::vector<int>> result;
  for (int start = 0; start < carrier_size_; ++start) {
    if (done[static_cast<size_t>(start)]) continue;
    std::set<int> orbit;
    for (const auto& e : elements_) orbit.insert(e(start));
    result.emplace_back(orbit.begin(), orbit.end());
    for (int p : result.back()) done[static_cast<size_t>(p)] = true;
  }
  return result;
}

std::vector<int> FiniteGroup::stabilizer(int point) const {
  if (point < 0 || point >= carrier_size_) throw NotAnElement("carrier point out of range");
  std::vector<int> fixing;
  for (int i = 0; i < order(); ++i) {
    if (elements_[static_cast<size_t>(i)](point) == point) fixing.push_back(i);
  }
  return fixing;
}

bool FiniteGroup::is_transitive() const { return orbits().size() == 1; }

bool FiniteGroup::is_simply_transitive() const {
  // counts[x][y] = number of elements mapping x to y; simply transitive means
  // every count is exactly 1.
  for (int x = 0; x < carrier_size_; ++x) {
    std::vector<int> counts(static_cast<size_t>(carrier_size_), 0);
    for (const auto& e : elements_) ++counts[static_cast<size_t>(e(x))];
    for (int c : counts) {
      if (c != 1) return false;
    }
  }
  return true;
}

nlohmann::json FiniteGroup::to_json(std::span<const std::string> element_labels) const {
  nlohmann::json j;
  j["carrier_size"] = carrier_size_;
  j["order"] = order();
  j["classification"] = classify(*this).to_json();
  nlohmann::json orders = nlohmann::json::array();
  for (int i = 0; i < order(); ++i) orders.push_back(element_order(i));
  j["element_orders"] = std::move(orders);
  j["orbits"] = orbits();
  if (!element_labels.empty()) {
    j["elements"] = std::vector<std::string>(element_labels.begin(), element_labels.end());
  }
  return j;
}

std::string GroupClassification::to_string() const {
  switch (kind) {
    case Kind::Cyclic: return "Cyclic(" + std::to_string(degree) + ")";
    case Kind::Dihedral: return "Dihedral(" + std::to_string(degree) + ")";
    default: return "Other";
  }
}

nlohmann::json GroupClassification::to_json() const {
  switch (kind) {
    case Kind::Cyclic: return {{"kind", "cyclic"}, {"n", degree}};
    case Kind::Dihedral: return {{"kind", "dihedral"}, {"n", degree}};
    default: return {{"kind", "other"}};
  }
}

namespace {

// Size of <seed elements> computed over Cayley indices.
int generated_order(const FiniteGroup& g, std::initializer_list<int> seeds) {
  std::set<int> members = {g.identity_index()};
  std::vector<int> queue(seeds);
  for (int s : seeds) members.insert(s);
  while (!queue.empty()) {
    const int a = queue.back();
    queue.pop_back();
    for (int s : seeds) {
      for (int product : {g.compose(a, s), g.compose(s, a)}) {
        if (members.insert(product).second) queue.push_back(product);
      }
    }
  }
  return static_cast<int>(members.size());
}

}  // namespace

GroupClassification classify(const FiniteGroup& g) {
  const int order = g.order();
  for (int i = 0; i < order; ++i) {
    if (g.element_order(i) == order) {
      return {GroupClassification::Kind::Cyclic, order, i, -1};
    }
  }
  if (order % 2 == 0) {
    const int half = order / 2;
    for (int r = 0; r < order; ++r) {
      if (g.element_order(r) != half) continue;
      for (int s = 0; s < order; ++s) {
        if (g.element_order(s) != 2) continue;
        const bool inverts = g.compose(s, g.compose(r, s)) == g.inverse_of(r);
        if (inverts && generated_order(g, {r, s}) == order) {
          return {GroupClassification::Kind::Dihedral, half, r, s};
        }
      }
    }
  }
  return {};
}

}  // namespace qtg
