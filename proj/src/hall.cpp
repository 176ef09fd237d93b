#include "nilmult/hall.hpp"

#include <functional>
#include <stdexcept>

#include "nilmult/errors.hpp"
#include "nilmult/witt.hpp"

namespace nilmult {

struct BasicCommutator::Node {
  std::shared_ptr<const Alphabet> alphabet;
  std::size_t letter = 0;
  std::optional<std::pair<BasicCommutator, BasicCommutator>> children;
  unsigned weight = 1;
  std::vector<unsigned> content;
  std::size_t hash = 0;
};

std::shared_ptr<const Alphabet> Alphabet::standard(std::size_t d) {
  auto a = std::make_shared<Alphabet>();
  a->labels.reserve(d);
  for (std::size_t i = 0; i < d; ++i)
    a->labels.push_back("x" + std::to_string(i + 1));
  return a;
}

BasicCommutator::BasicCommutator(std::shared_ptr<const Node> node)
    : node_(std::move(node)) {}

BasicCommutator BasicCommutator::letter(
    std::shared_ptr<const Alphabet> alphabet, std::size_t index) {
  if (!alphabet || index >= alphabet->size())
    throw std::out_of_range("letter index outside alphabet");
  auto n = std::make_shared<Node>();
  n->content.assign(alphabet->size(), 0);
  n->content[index] = 1;
  n->alphabet = std::move(alphabet);
  n->letter = index;
  n->hash = std::hash<std::size_t>{}(index) * 0x9e3779b97f4a7c15ULL + 1;
  return BasicCommutator(std::move(n));
}

BasicCommutator BasicCommutator::bracket(const BasicCommutator& left,
                                         const BasicCommutator& right) {
  if (!(left.alphabet() == right.alphabet()))
    throw std::invalid_argument("bracket of commutators over different alphabets");
  auto n = std::make_shared<Node>();
  n->alphabet = left.node_->alphabet;
  n->children.emplace(left, right);
  n->weight = left.weight() + right.weight();
  n->content = left.content();
  for (std::size_t i = 0; i < n->content.size(); ++i)
    n->content[i] += right.content()[i];
  std::size_t h = left.hash();
  h ^= right.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  n->hash = h * 31 + 7;
  return BasicCommutator(std::move(n));
}

bool BasicCommutator::is_letter() const { return !node_->children; }

std::size_t BasicCommutator::letter_index() const {
  if (!is_letter()) throw std::logic_error("not a letter");
  return node_->letter;
}

const BasicCommutator& BasicCommutator::left() const {
  if (is_letter()) throw std::logic_error("letter has no children");
  return node_->children->first;
}

const BasicCommutator& BasicCommutator::right() const {
  if (is_letter()) throw std::logic_error("letter has no children");
  return node_->children->second;
}

unsigned BasicCommutator::weight() const { return node_->weight; }
const std::vector<unsigned>& BasicCommutator::content() const {
  return node_->content;
}
const Alphabet& BasicCommutator::alphabet() const { return *node_->alphabet; }
const std::shared_ptr<const Alphabet>& BasicCommutator::alphabet_ptr() const {
  return node_->alphabet;
}
std::size_t BasicCommutator::hash() const { return node_->hash; }

std::string BasicCommutator::render() const {
  if (is_letter()) return alphabet().labels[node_->letter];
  std::string l = left().render();
  if (!left().is_letter()) {
    l.pop_back();  // drop ']' to continue the left-normed chain
    return l + "," + right().render() + "]";
  }
  return "[" + l + "," + right().render() + "]";
}

bool operator==(const BasicCommutator& a, const BasicCommutator& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.weight() != b.weight()) return false;
  if (a.is_letter() != b.is_letter()) return false;
  if (!(a.alphabet() == b.alphabet())) return false;
  if (a.is_letter()) return a.letter_index() == b.letter_index();
  return a.left() == b.left() && a.right() == b.right();
}

namespace {

std::strong_ordering compare_same_alphabet(const BasicCommutator& a,
                                           const BasicCommutator& b) {
  if (auto w = a.weight() <=> b.weight(); w != 0) return w;
  if (a.is_letter()) return a.letter_index() <=> b.letter_index();
  if (auto l = compare_same_alphabet(a.left(), b.left()); l != 0) return l;
  return compare_same_alphabet(a.right(), b.right());
}

}  // namespace

std::strong_ordering compare(const BasicCommutator& a,
                             const BasicCommutator& b) {
  if (a.alphabet_ptr() != b.alphabet_ptr() && !(a.alphabet() == b.alphabet()))
    throw std::invalid_argument("compare: commutators over different alphabets");
  return compare_same_alphabet(a, b);
}

bool is_basic(const BasicCommutator& c) {
  if (c.is_letter()) return true;
  const auto& l = c.left();
  const auto& r = c.right();
  if (!is_basic(l) || !is_basic(r)) return false;
  if (compare(l, r) != std::strong_ordering::greater) return false;
  if (!l.is_letter() && compare(r, l.right()) == std::strong_ordering::less)
    return false;
  return true;
}

bool is_mixed(const BasicCommutator& c, std::size_t split) {
  bool low = false;
  bool high = false;
  const auto& content = c.content();
  for (std::size_t i = 0; i < content.size(); ++i) {
    if (content[i] == 0) continue;
    (i < split ? low : high) = true;
  }
  return low && high;
}

std::optional<std::size_t> HallBasis::index_of(const BasicCommutator& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::pair<std::size_t, std::size_t> HallBasis::stratum(unsigned w) const {
  if (w == 0 || w > max_weight_) return {elements_.size(), elements_.size()};
  return {stratum_begin_[w], stratum_begin_[w + 1]};
}

HallBasis generate(std::shared_ptr<const Alphabet> alphabet,
                   unsigned max_weight, std::uint64_t ceiling) {
  if (!alphabet) throw std::invalid_argument("generate: null alphabet");
  if (max_weight == 0)
    throw std::invalid_argument("generate: max_weight must be positive");
  const std::size_t d = alphabet->size();

  BigInt predicted = 0;
  for (unsigned n = 1; n <= max_weight; ++n) predicted += witt(n, d);
  if (predicted > ceiling)
    throw ResourceLimitError("enumeration too large: " + predicted.str() +
                             " basic commutators exceed ceiling " +
                             std::to_string(ceiling));

  HallBasis basis;
  basis.alphabet_ = alphabet;
  basis.max_weight_ = max_weight;
  const auto total = static_cast<std::size_t>(predicted);
  basis.elements_.reserve(total);
  basis.children_.reserve(total);
  basis.stratum_begin_.assign(max_weight + 2, 0);

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  basis.stratum_begin_[1] = 0;
  for (std::size_t i = 0; i < d; ++i) {
    basis.elements_.push_back(BasicCommutator::letter(alphabet, i));
    basis.children_.emplace_back(kNone, kNone);
  }
  basis.stratum_begin_[2] = basis.elements_.size();

  for (unsigned n = 2; n <= max_weight; ++n) {
    const std::size_t end_prev = basis.elements_.size();
    // Left child ascending, then right child ascending: this is the
    // lexicographic order within the stratum.
    for (std::size_t i = 0; i < end_prev; ++i) {
      const unsigned wi = basis.elements_[i].weight();
      if (wi >= n || 2 * wi < n) continue;
      const unsigned wj = n - wi;
      std::size_t lo = basis.stratum_begin_[wj];
      const std::size_t hi = std::min(basis.stratum_begin_[wj + 1], i);
      if (basis.children_[i].second != kNone)
        lo = std::max(lo, basis.children_[i].second);
      for (std::size_t j = lo; j < hi; ++j) {
        basis.elements_.push_back(
            BasicCommutator::bracket(basis.elements_[i], basis.elements_[j]));
        basis.children_.emplace_back(i, j);
      }
    }
    basis.stratum_begin_[n + 1] = basis.elements_.size();
  }

  if (basis.elements_.size() != total)
    throw std::logic_error("generate: stratum sizes disagree with witt()");
  basis.index_.reserve(total);
  for (std::size_t i = 0; i < basis.elements_.size(); ++i)
    basis.index_.emplace(basis.elements_[i], i);
  return basis;
}

HallBasis generate(std::size_t d, unsigned max_weight, std::uint64_t ceiling) {
  return generate(Alphabet::standard(d), max_weight, ceiling);
}

}  // namespace nilmult
