#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace choicectx {

inline constexpr int kMaxVariables = 64;

/// A set of variable indices into a Scenario's canonically sorted variable
/// list, stored as a 64-bit mask.
///
/// Ordering is shortlex: smaller sets first, equal-size sets compared as
/// ascending index tuples. Contexts and events are kept in this order
/// everywhere, so "first" counterexamples are well defined.
class VarSet {
 public:
  constexpr VarSet() = default;
  constexpr explicit VarSet(std::uint64_t bits) : bits_(bits) {}
  VarSet(std::initializer_list<int> members) {
    for (int m : members) insert(m);
  }

  static constexpr VarSet range(int n) {
    return VarSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr bool subset_of(VarSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VarSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr void insert(int i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(int i) { bits_ &= ~(std::uint64_t{1} << i); }

  /// Lowest member; undefined on the empty set.
  constexpr int front() const { return std::countr_zero(bits_); }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  friend constexpr VarSet operator&(VarSet a, VarSet b) { return VarSet(a.bits_ & b.bits_); }
  friend constexpr VarSet operator|(VarSet a, VarSet b) { return VarSet(a.bits_ | b.bits_); }
  friend constexpr VarSet operator-(VarSet a, VarSet b) { return VarSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VarSet a, VarSet b) = default;

  friend constexpr std::strong_ordering operator<=>(VarSet a, VarSet b) {
    if (a.bits_ == b.bits_) return std::strong_ordering::equal;
    int sa = a.size();
    int sb = b.size();
    if (sa != sb) return sa <=> sb;
    // Equal sizes: the set holding the lowest differing index has the
    // smaller element at the first position where the tuples differ.
    std::uint64_t diff = a.bits_ ^ b.bits_;
    return (a.bits_ & diff & (~diff + 1)) != 0 ? std::strong_ordering::less
                                               : std::strong_ordering::greater;
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Calls `fn(VarSet)` for every subset of `of`, in increasing order of the
/// subset's packed mask relative to `of`'s members.
template <typename Fn>
void for_each_subset(VarSet of, Fn&& fn) {
  const std::uint64_t full = of.bits();
  std::uint64_t sub = 0;
  while (true) {
    fn(VarSet(sub));
    if (sub == full) break;
    sub = (sub - full) & full;
  }
}

}  // namespace choicectx

template <>
struct std::hash<choicectx::VarSet> {
  std::size_t operator()(choicectx::VarSet s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};
