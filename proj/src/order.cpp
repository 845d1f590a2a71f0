#include "edgering/order.hpp"

namespace edgering {

MonomialOrder MonomialOrder::block(std::size_t cut, OrderKind front, OrderKind back) {
  if (front == OrderKind::Block || back == OrderKind::Block)
    throw InvalidInput("block order takes simple inner orders");
  MonomialOrder o(OrderKind::Block);
  o.cut_ = cut;
  o.front_ = front;
  o.back_ = back;
  return o;
}

std::strong_ordering MonomialOrder::compare_simple(OrderKind kind, std::span<const Int> a,
                                                   std::span<const Int> b) {
  if (kind == OrderKind::Lex) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] <=> b[i];
    }
    return std::strong_ordering::equal;
  }
  // grevlex: higher total degree wins; ties break by the smaller exponent
  // on the last variable where they differ.
  Int da = 0, db = 0;
  for (Int e : a) da = checked_add(da, e);
  for (Int e : b) db = checked_add(db, e);
  if (da != db) return da <=> db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrder::compare(std::span<const Int> a, std::span<const Int> b) const {
  if (a.size() != b.size()) throw InvalidInput("monomial comparison: length mismatch");
  if (kind_ != OrderKind::Block) return compare_simple(kind_, a, b);
  if (cut_ > a.size()) throw InvalidInput("block order cut exceeds variable count");
  auto front = compare_simple(front_, a.subspan(0, cut_), b.subspan(0, cut_));
  if (front != std::strong_ordering::equal) return front;
  return compare_simple(back_, a.subspan(cut_), b.subspan(cut_));
}

std::string MonomialOrder::name() const {
  auto simple = [](OrderKind k) { return k == OrderKind::Lex ? "lex" : "grevlex"; };
  if (kind_ != OrderKind::Block) return simple(kind_);
  return std::string("block(") + std::to_string(cut_) + ";" + simple(front_) + "|" + simple(back_) + ")";
}

MonomialOrder parse_order(std::string_view name) {
  if (name == "lex") return MonomialOrder::lex();
  if (name == "grevlex") return MonomialOrder::grevlex();
  throw InvalidInput("unknown monomial order \"" + std::string(name) + "\" (expected lex or grevlex)");
}

}  // namespace edgering
