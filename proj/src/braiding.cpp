#include "regcat/braiding.hpp"

#include "regcat/inverses.hpp"

namespace regcat {

namespace {

void require_typed(const FinMap& map, const SetRef& dom_left, const SetRef& dom_right,
                   const std::string& what) {
  const std::string dom = ProductSet({dom_left, dom_right}).carrier()->id();
  const std::string cod = ProductSet({dom_right, dom_left}).carrier()->id();
  if (map.dom()->id() != dom || map.cod()->id() != cod) {
    throw Error(Errc::TypeMismatch, what + " must map " + dom + " -> " + cod + ", got " +
                                        describe_type(map));
  }
}

void require_idempotent(const FinMap& e) {
  if (!e.is_endo()) throw Error(Errc::TypeMismatch, describe_type(e) + " is not an endomap");
  if (!is_idempotent(e)) throw Error(Errc::NotIdempotent, e.name());
}

}  // namespace

Braiding::Braiding(SetRef left, SetRef right, FinMap map)
    : left_(std::move(left)), right_(std::move(right)), map_(std::move(map)) {
  require_typed(map_, left_, right_, "braiding " + map_.name());
}

Braiding Braiding::from_table(std::string name, SetRef left, SetRef right,
                              std::vector<Index> table) {
  ProductSet dom({left, right});
  ProductSet cod({right, left});
  FinMap map(std::move(name), dom.carrier(), cod.carrier(), std::move(table));
  return Braiding(std::move(left), std::move(right), std::move(map));
}

Braiding Braiding::swap(const SetRef& left, const SetRef& right) {
  const auto nl = static_cast<Index>(left->size());
  const auto nr = static_cast<Index>(right->size());
  std::vector<Index> table(static_cast<std::size_t>(nl) * nr);
  for (Index x = 0; x < nl; ++x) {
    for (Index y = 0; y < nr; ++y) table[x * nr + y] = y * nl + x;
  }
  return from_table("swap", left, right, std::move(table));
}

std::pair<Index, Index> Braiding::apply(Index x, Index y) const {
  const auto nl = static_cast<Index>(left_->size());
  const auto nr = static_cast<Index>(right_->size());
  Index v = map_(x * nr + y);
  return {v / nl, v % nl};
}

bool check_symmetry(const Braiding& b, const Braiding& b_rev) {
  require_typed(b_rev.map(), b.right(), b.left(), "reverse braiding " + b_rev.name());
  return is_identity(compose(b_rev.map(), b.map()));
}

bool check_regular_braiding(const Braiding& b, const Braiding& b_star) {
  require_typed(b_star.map(), b.right(), b.left(), "star braiding " + b_star.name());
  return is_inverse(b.map(), b_star.map(), InverseKind::inner);
}

FinMap prebraid(const Braiding& b, Side side, const FinMap& e) {
  require_idempotent(e);
  const SetRef& p = e.dom();
  const SetRef& q = b.left();
  const SetRef& r = b.right();
  // left: (p, q, r) ↦ (e p, B(q, r)); right: (q, r, p) ↦ (B(q, r), e p)
  ProductSet dom = side == Side::left ? ProductSet({p, q, r}) : ProductSet({q, r, p});
  ProductSet cod = side == Side::left ? ProductSet({p, r, q}) : ProductSet({r, q, p});
  std::vector<Index> table(dom.carrier()->size());
  for (Index i = 0; i < table.size(); ++i) {
    auto t = dom.tuple(i);
    std::array<Index, 3> out{};
    if (side == Side::left) {
      auto [u, v] = b.apply(t[1], t[2]);
      out = {e(t[0]), u, v};
    } else {
      auto [u, v] = b.apply(t[0], t[1]);
      out = {u, v, e(t[2])};
    }
    table[i] = cod.index(out);
  }
  std::string name = side == Side::left ? e.name() + "⊗" + b.name() : b.name() + "⊗" + e.name();
  return FinMap(std::move(name), dom.carrier(), cod.carrier(), std::move(table));
}

void ObstructorAssignment::assign(const FinMap& e) {
  require_idempotent(e);
  if (level_ == 1 && !is_identity(e)) {
    throw Error(Errc::InvalidArgument, "level 1 obstructors are identities, got " + e.name());
  }
  by_object_.insert_or_assign(e.dom()->id(), e);
}

FinMap ObstructorAssignment::for_object(const SetRef& x) const {
  auto it = by_object_.find(x->id());
  if (it != by_object_.end()) return it->second;
  return identity(x);
}

FinMap composite_prebraid(const Braiding& first, const Braiding& second,
                          const ObstructorAssignment& e, CompositeKind which) {
  if (which == CompositeKind::product_left) {
    // first = B_{Y,Z}, second = B_{X,Z}
    if (second.right()->id() != first.right()->id()) {
      throw Error(Errc::TypeMismatch, second.name() + " and " + first.name() +
                                          " do not share the braided object");
    }
    FinMap inner = prebraid(first, Side::left, e.for_object(second.left()));
    FinMap outer = prebraid(second, Side::right, e.for_object(first.left()));
    return compose(outer, inner);
  }
  // first = B_{Z,X}, second = B_{Z,Y}
  if (second.left()->id() != first.left()->id()) {
    throw Error(Errc::TypeMismatch, second.name() + " and " + first.name() +
                                        " do not share the braided object");
  }
  FinMap inner = prebraid(first, Side::right, e.for_object(second.right()));
  FinMap outer = prebraid(second, Side::left, e.for_object(first.right()));
  return compose(outer, inner);
}

bool check_prebraid_regularity(const FinMap& p, const FinMap& p_star) {
  return is_inverse(p, p_star, InverseKind::inner);
}

YbeCheck check_ybe(const Braiding& b, const FinMap& e, YbeMode mode) {
  const SetRef& x = b.left();
  if (b.right()->id() != x->id()) {
    throw Error(Errc::TypeMismatch, "braiding " + b.name() + " is not on a single carrier");
  }
  if (e.dom()->id() != x->id()) {
    throw Error(Errc::TypeMismatch, describe_type(e) + " is not an endomap of " + x->id());
  }
  require_idempotent(e);
  if (mode == YbeMode::classical && !is_identity(e)) {
    throw Error(Errc::InvalidArgument, "classical mode needs the identity obstructor");
  }

  const auto n = static_cast<Index>(x->size());
  using Triple = std::array<Index, 3>;
  auto left = [&](const Triple& t) -> Triple {
    auto [u, v] = b.apply(t[1], t[2]);
    return {e(t[0]), u, v};
  };
  auto right = [&](const Triple& t) -> Triple {
    auto [u, v] = b.apply(t[0], t[1]);
    return {u, v, e(t[2])};
  };

  YbeCheck out;
  for (Index p = 0; p < n; ++p) {
    for (Index q = 0; q < n; ++q) {
      for (Index r = 0; r < n; ++r) {
        const Triple t{p, q, r};
        if (right(left(right(t))) != left(right(left(t)))) {
          out.holds = false;
          out.witness = t;
          return out;
        }
      }
    }
  }
  return out;
}

std::pair<FinMap, FinMap> ybe_sides(const Braiding& b, const FinMap& e) {
  FinMap l = prebraid(b, Side::left, e);
  FinMap r = prebraid(b, Side::right, e);
  FinMap lhs = compose(r, compose(l, r));
  FinMap rhs = compose(l, compose(r, l));
  return {lhs, rhs};
}

std::vector<FinMap> enumerate_idempotents(const SetRef& x) {
  std::vector<FinMap> out;
  const auto n = x->size();
  for_each_table(n, n, [&](const std::vector<Index>& t) {
    bool idem = true;
    for (Index i = 0; i < n && idem; ++i) idem = t[t[i]] == t[i];
    if (idem) out.emplace_back("e" + std::to_string(out.size()), x, x, t);
    return true;
  });
  return out;
}

}  // namespace regcat
