#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>

namespace bolalg {

/// Sparse structure-constant tensor of rank N over a declared dimension.
/// Absent entries are zero; storing a zero erases the entry.
template <class Scalar, int N>
class Tensor {
 public:
  using Index = std::array<int, N>;
  using Storage = std::map<Index, Scalar>;

  Tensor() = default;
  explicit Tensor(int dim) : dim_(dim) {
    if (dim < 0) throw std::invalid_argument("negative tensor dimension");
  }

  int dim() const { return dim_; }
  bool empty() const { return entries_.empty(); }
  std::size_t nonzeros() const { return entries_.size(); }
  const Storage& entries() const { return entries_; }

  Scalar operator()(const Index& idx) const {
    check(idx);
    const auto it = entries_.find(idx);
    return it == entries_.end() ? Scalar(0) : it->second;
  }

  template <class... I>
  Scalar operator()(I... i) const {
    static_assert(sizeof...(I) == N);
    return (*this)(Index{static_cast<int>(i)...});
  }

  void set(const Index& idx, const Scalar& value) {
    check(idx);
    if (value == Scalar(0))
      entries_.erase(idx);
    else
      entries_[idx] = value;
  }

  void add(const Index& idx, const Scalar& value) { set(idx, (*this)(idx) + value); }

  bool operator==(const Tensor& other) const {
    return dim_ == other.dim_ && entries_ == other.entries_;
  }

 private:
  void check(const Index& idx) const {
    for (int i : idx)
      if (i < 0 || i >= dim_)
        throw std::out_of_range("tensor index " + std::to_string(i) + " outside dimension " +
                                std::to_string(dim_));
  }

  int dim_ = 0;
  Storage entries_;
};

template <class Scalar>
using Tensor3 = Tensor<Scalar, 3>;
template <class Scalar>
using Tensor4 = Tensor<Scalar, 4>;

}  // namespace bolalg
