#ifndef EDGERING_ORDER_HPP
#define EDGERING_ORDER_HPP

#include <compare>
#include <span>
#include <string>

#include "edgering/util.hpp"

namespace edgering {

enum class OrderKind { Lex, GrevLex, Block };

/// Monomial order with variable precedence x1 > x2 > ... > xn.
/// Block orders compare the front block (the first `cut` variables) first;
/// each block uses a simple (non-block) comparison.
class MonomialOrder {
public:
  static MonomialOrder lex() { return MonomialOrder(OrderKind::Lex); }
  static MonomialOrder grevlex() { return MonomialOrder(OrderKind::GrevLex); }
  static MonomialOrder block(std::size_t cut, OrderKind front, OrderKind back);

  std::strong_ordering compare(std::span<const Int> a, std::span<const Int> b) const;
  bool greater(std::span<const Int> a, std::span<const Int> b) const {
    return compare(a, b) == std::strong_ordering::greater;
  }
  bool less(std::span<const Int> a, std::span<const Int> b) const {
    return compare(a, b) == std::strong_ordering::less;
  }

  OrderKind kind() const { return kind_; }
  std::size_t cut() const { return cut_; }
  std::string name() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

private:
  explicit MonomialOrder(OrderKind kind) : kind_(kind) {}

  static std::strong_ordering compare_simple(OrderKind kind, std::span<const Int> a, std::span<const Int> b);

  OrderKind kind_;
  std::size_t cut_ = 0;
  OrderKind front_ = OrderKind::Lex;
  OrderKind back_ = OrderKind::Lex;
};

/// Accepts "lex" and "grevlex".
MonomialOrder parse_order(std::string_view name);

}  // namespace edgering

#endif
