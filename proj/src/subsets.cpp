#include "boolcube/subsets.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace boolcube {

namespace {

CubeDim universe_dim(std::size_t size) {
  if (size == 0 || size > CubeDim::kMax) {
    throw std::domain_error("universe must have between 1 and 30 elements, got " +
                            std::to_string(size));
  }
  return CubeDim(static_cast<unsigned>(size));
}

std::uint64_t first_of_layer(unsigned k) { return (std::uint64_t{1} << k) - 1; }

// Next larger integer with the same popcount; x must be nonzero.
std::uint64_t next_same_weight(std::uint64_t x) {
  const std::uint64_t lowest = x & (~x + 1);
  const std::uint64_t ripple = x + lowest;
  return (((ripple ^ x) >> 2) / lowest) | ripple;
}

}  // namespace

SubsetUniverse::SubsetUniverse(std::vector<std::string> elements)
    : elements_(std::move(elements)), dim_(universe_dim(elements_.size())) {
  std::unordered_set<std::string_view> seen;
  for (const auto& e : elements_) {
    if (!seen.insert(e).second) throw std::domain_error("duplicate universe label '" + e + "'");
  }
}

std::size_t SubsetUniverse::position_of(std::string_view label) const {
  const auto it = std::find(elements_.begin(), elements_.end(), label);
  if (it == elements_.end()) throw std::domain_error("unknown label '" + std::string(label) + "'");
  return static_cast<std::size_t>(it - elements_.begin());
}

SubsetHandle rank(const SubsetUniverse& universe, std::span<const std::string> members) {
  const std::size_t n = universe.size();
  std::uint64_t serial = 0;
  for (const auto& m : members) serial |= std::uint64_t{1} << (n - 1 - universe.position_of(m));
  return SubsetHandle(universe, serial);
}

std::vector<std::string> unrank(const SubsetUniverse& universe, std::uint64_t serial) {
  const VecSerial v(serial, universe.dim());
  const std::size_t n = universe.size();
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (v.value() >> (n - 1 - i) & 1u) out.push_back(universe.elements()[i]);
  }
  return out;
}

std::vector<std::string> unrank(const SubsetHandle& handle) {
  return unrank(handle.universe(), handle.serial().value());
}

SubsetHandle set_op(const SubsetHandle& a, const SubsetHandle& b, SetOp op) {
  if (op != SetOp::complement_of_a && !(a.universe() == b.universe())) {
    throw std::domain_error("set operation on subsets of different universes");
  }
  const std::uint64_t x = a.serial().value();
  const std::uint64_t y = b.serial().value();
  const std::uint64_t all = a.universe().dim().size() - 1;
  std::uint64_t r = 0;
  switch (op) {
    case SetOp::union_: r = x | y; break;
    case SetOp::intersection: r = x & y; break;
    case SetOp::complement_of_a: r = ~x & all; break;
    case SetOp::symmetric_difference: r = x ^ y; break;
  }
  return SubsetHandle(a.universe(), r);
}

SubsetStream::SubsetStream(const SubsetUniverse& universe, unsigned first_layer, unsigned last_layer,
                           bool materialize)
    : universe_(&universe), first_layer_(first_layer), last_layer_(last_layer) {
  if (materialize) {
    seq_ = std::make_shared<const WloSequence>(wlo_bucket(universe.dim()));
  }
}

SubsetStream::iterator::iterator(const SubsetStream* stream, bool done)
    : stream_(stream), done_(done), layer_(stream->first_layer_) {
  if (done_) return;
  current_ = first_of_layer(layer_);
  settle();
}

void SubsetStream::iterator::settle() {
  if (!stream_->seq_) return;
  while (layer_ <= stream_->last_layer_ && position_ >= stream_->seq_->layer(layer_).size()) {
    ++layer_;
    position_ = 0;
  }
  if (layer_ > stream_->last_layer_) done_ = true;
  else current_ = stream_->seq_->layer(layer_)[position_];
}

SubsetStream::iterator& SubsetStream::iterator::operator++() {
  if (done_) return *this;
  if (stream_->seq_) {
    ++position_;
    settle();
    return *this;
  }
  const std::uint64_t size = stream_->universe_->dim().size();
  const std::uint64_t next = current_ == 0 ? size : next_same_weight(current_);
  if (next < size) {
    current_ = next;
  } else if (++layer_ > stream_->last_layer_) {
    done_ = true;
  } else {
    current_ = first_of_layer(layer_);
  }
  return *this;
}

SubsetStream subsets_in_cardinality_order(const SubsetUniverse& universe) {
  return SubsetStream(universe, 0, universe.dim().n());
}

SubsetStream k_subsets(const SubsetUniverse& universe, unsigned k) {
  if (k > universe.dim().n()) {
    throw std::out_of_range("k=" + std::to_string(k) + " exceeds universe size " +
                            std::to_string(universe.size()));
  }
  return SubsetStream(universe, k, k);
}

std::string format_subset(std::span<const std::string> labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ',';
    out += labels[i];
  }
  return out;
}

}  // namespace boolcube
