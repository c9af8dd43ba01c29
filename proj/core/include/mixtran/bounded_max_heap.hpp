#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <utility>
#include <vector>

namespace mixtran {

/// Binary max-heap holding at most `capacity` entries keyed by a double.
/// Used by the top-k search with the evict-worst-then-insert protocol:
/// the heap then holds the k smallest keys seen, with the current k-th
/// best (the largest kept key) at the root.
template <typename T>
class BoundedMaxHeap {
public:
  struct Entry {
    double key;
    T value;
  };

  explicit BoundedMaxHeap(std::size_t capacity) : capacity_(capacity) {
    entries_.reserve(capacity);
  }

  std::size_t size() const { return entries_.size(); }
  std::size_t capacity() const { return capacity_; }
  bool full() const { return entries_.size() == capacity_; }

  /// Largest key currently held; heap must be non-empty.
  double max_key() const {
    assert(!entries_.empty());
    return entries_.front().key;
  }

  /// Heap must not be full.
  void push(double key, T value) {
    assert(entries_.size() < capacity_);
    entries_.push_back(Entry{key, std::move(value)});
    std::push_heap(entries_.begin(), entries_.end(), by_key);
  }

  /// Removes the entry with the largest key; heap must be non-empty.
  void pop_max() {
    assert(!entries_.empty());
    std::pop_heap(entries_.begin(), entries_.end(), by_key);
    entries_.pop_back();
  }

  /// Consumes the heap, returning entries ascending by key.
  std::vector<Entry> take_sorted() {
    std::sort_heap(entries_.begin(), entries_.end(), by_key);
    return std::move(entries_);
  }

private:
  static bool by_key(const Entry& lhs, const Entry& rhs) { return lhs.key < rhs.key; }

  std::size_t capacity_;
  std::vector<Entry> entries_;
};

}  // namespace mixtran
