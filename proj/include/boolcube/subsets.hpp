#pragma once

#include <cstdint>
#include <iterator>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "boolcube/cube.hpp"
#include "boolcube/wlo.hpp"

namespace boolcube {

// Ordered ground set. Element i corresponds to coordinate a_{i+1}, the
// (n-1-i)-th bit of a serial, so element 0 is the most significant.
class SubsetUniverse {
 public:
  // Throws std::domain_error on duplicate labels or a size outside [1, 30].
  explicit SubsetUniverse(std::vector<std::string> elements);

  CubeDim dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<std::string>& elements() const noexcept { return elements_; }
  // Throws std::domain_error for an unknown label.
  std::size_t position_of(std::string_view label) const;

  friend bool operator==(const SubsetUniverse& a, const SubsetUniverse& b) {
    return a.elements_ == b.elements_;
  }

 private:
  std::vector<std::string> elements_;
  CubeDim dim_;
};

// A subset, identified by the serial of its characteristic vector. Refers
// to its universe, which must outlive it.
class SubsetHandle {
 public:
  SubsetHandle(const SubsetUniverse& universe, std::uint64_t serial)
      : universe_(&universe), serial_(serial, universe.dim()) {}

  const SubsetUniverse& universe() const noexcept { return *universe_; }
  VecSerial serial() const noexcept { return serial_; }
  unsigned cardinality() const noexcept { return weight_of(serial_); }

  friend bool operator==(const SubsetHandle& a, const SubsetHandle& b) {
    return a.serial_ == b.serial_ && *a.universe_ == *b.universe_;
  }

 private:
  const SubsetUniverse* universe_;
  VecSerial serial_;
};

SubsetHandle rank(const SubsetUniverse& universe, std::span<const std::string> members);
// Members in universe order. Throws std::domain_error if serial >= 2^n.
std::vector<std::string> unrank(const SubsetUniverse& universe, std::uint64_t serial);
std::vector<std::string> unrank(const SubsetHandle& handle);

enum class SetOp { union_, intersection, complement_of_a, symmetric_difference };

// Throws std::domain_error when the universes differ.
SubsetHandle set_op(const SubsetHandle& a, const SubsetHandle& b, SetOp op);

// Lazily yields subsets in cardinality order: every layer in turn, ascending
// serial inside a layer (the WLO sequence). Small universes walk a
// materialized WloSequence; larger ones step through each layer with the
// next-integer-of-equal-popcount trick so nothing of size 2^n is stored.
class SubsetStream {
 public:
  static constexpr unsigned kMaterializeMax = 20;

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = SubsetHandle;
    using difference_type = std::ptrdiff_t;

    SubsetHandle operator*() const { return SubsetHandle(*stream_->universe_, current_); }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.done_ == b.done_ && (a.done_ || a.current_ == b.current_);
    }

   private:
    friend class SubsetStream;
    iterator(const SubsetStream* stream, bool done);
    void settle();

    const SubsetStream* stream_;
    bool done_;
    unsigned layer_ = 0;
    std::uint64_t position_ = 0;  // index into the WLO layer when materialized
    std::uint64_t current_ = 0;
  };

  SubsetStream(const SubsetUniverse& universe, unsigned first_layer, unsigned last_layer)
      : SubsetStream(universe, first_layer, last_layer, universe.size() <= kMaterializeMax) {}
  SubsetStream(const SubsetUniverse& universe, unsigned first_layer, unsigned last_layer,
               bool materialize);

  iterator begin() const { return iterator(this, false); }
  iterator end() const { return iterator(this, true); }
  bool materialized() const noexcept { return seq_ != nullptr; }

 private:
  const SubsetUniverse* universe_;
  unsigned first_layer_;
  unsigned last_layer_;
  std::shared_ptr<const WloSequence> seq_;
};

SubsetStream subsets_in_cardinality_order(const SubsetUniverse& universe);
// Throws std::out_of_range if k > n.
SubsetStream k_subsets(const SubsetUniverse& universe, unsigned k);

// Comma-joined labels, in universe order.
std::string format_subset(std::span<const std::string> labels);

}  // namespace boolcube
