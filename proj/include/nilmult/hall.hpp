#pragma once

// Basic commutators (Hall basis) over a totally ordered finite alphabet.
//
// A basic commutator is a letter, or a bracket [c_i, c_j] of basic
// commutators with c_i > c_j and, when c_i = [c_s, c_t], c_j >= c_t.
// The basis order puts lighter commutators first; within one weight,
// brackets are ordered lexicographically on (left, right).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace nilmult {

inline constexpr std::uint64_t kDefaultBasisCeiling = 1'000'000;

/// Ordered letters; position in `labels` is the letter index.
struct Alphabet {
  std::vector<std::string> labels;

  /// x1, x2, ..., xd
  static std::shared_ptr<const Alphabet> standard(std::size_t d);

  std::size_t size() const { return labels.size(); }
  friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

class BasicCommutator {
 public:
  static BasicCommutator letter(std::shared_ptr<const Alphabet> alphabet,
                                std::size_t index);
  /// Forms [left, right] without checking the basic-commutator conditions;
  /// see is_basic() for that.
  static BasicCommutator bracket(const BasicCommutator& left,
                                 const BasicCommutator& right);

  bool is_letter() const;
  std::size_t letter_index() const;
  const BasicCommutator& left() const;
  const BasicCommutator& right() const;

  unsigned weight() const;
  /// Multiplicity of each letter index in the commutator.
  const std::vector<unsigned>& content() const;
  const Alphabet& alphabet() const;
  const std::shared_ptr<const Alphabet>& alphabet_ptr() const;
  std::size_t hash() const;

  /// "x1", "[x2,x1]"; left-normed chains flatten to "[x2,x1,x1]".
  std::string render() const;

  friend bool operator==(const BasicCommutator& a, const BasicCommutator& b);

 private:
  struct Node;
  explicit BasicCommutator(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

struct BasicCommutatorHash {
  std::size_t operator()(const BasicCommutator& c) const { return c.hash(); }
};

/// Basis order. Throws std::invalid_argument for different alphabets.
std::strong_ordering compare(const BasicCommutator& a,
                             const BasicCommutator& b);

/// Re-checks the defining conditions recursively, independent of generate().
bool is_basic(const BasicCommutator& c);

/// True iff the content meets both the letters below `split` and those at or
/// above it.
bool is_mixed(const BasicCommutator& c, std::size_t split);

class HallBasis {
 public:
  std::size_t size() const { return elements_.size(); }
  const BasicCommutator& operator[](std::size_t i) const {
    return elements_[i];
  }
  const std::vector<BasicCommutator>& elements() const { return elements_; }
  const Alphabet& alphabet() const { return *alphabet_; }
  const std::shared_ptr<const Alphabet>& alphabet_ptr() const {
    return alphabet_;
  }
  std::size_t letters() const { return alphabet_->size(); }
  unsigned max_weight() const { return max_weight_; }

  std::optional<std::size_t> index_of(const BasicCommutator& c) const;

  /// Half-open index range [first, second) of the weight-w elements.
  std::pair<std::size_t, std::size_t> stratum(unsigned w) const;

  /// Basis positions of the children of a bracket element.
  std::size_t left_index(std::size_t i) const { return children_[i].first; }
  std::size_t right_index(std::size_t i) const { return children_[i].second; }

 private:
  friend HallBasis generate(std::shared_ptr<const Alphabet>, unsigned,
                            std::uint64_t);

  std::shared_ptr<const Alphabet> alphabet_;
  unsigned max_weight_ = 0;
  std::vector<BasicCommutator> elements_;
  std::vector<std::pair<std::size_t, std::size_t>> children_;
  std::vector<std::size_t> stratum_begin_;  // indexed by weight, size W+2
  std::unordered_map<BasicCommutator, std::size_t, BasicCommutatorHash>
      index_;
};

/// All basic commutators of weight <= max_weight. Throws ResourceLimitError
/// when the predicted size exceeds `ceiling`.
HallBasis generate(std::shared_ptr<const Alphabet> alphabet,
                   unsigned max_weight,
                   std::uint64_t ceiling = kDefaultBasisCeiling);
HallBasis generate(std::size_t d, unsigned max_weight,
                   std::uint64_t ceiling = kDefaultBasisCeiling);

}  // namespace nilmult
