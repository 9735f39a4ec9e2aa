#include "regcat/finmap.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace regcat {

FiniteSet::FiniteSet(std::string id, std::vector<std::string> labels,
                     std::vector<SetRef> factors)
    : id_(std::move(id)), labels_(std::move(labels)), factors_(std::move(factors)) {
  index_.reserve(labels_.size());
  for (Index i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second) {
      throw Error(Errc::DuplicateLabel, labels_[i] + " in set " + id_);
    }
  }
}

SetRef FiniteSet::make(std::string id, std::vector<std::string> labels) {
  return SetRef(new FiniteSet(std::move(id), std::move(labels), {}));
}

SetRef FiniteSet::range(std::string id, std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return make(std::move(id), std::move(labels));
}

std::optional<Index> FiniteSet::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

std::string product_id(const std::vector<SetRef>& factors) {
  std::string id;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) id += '*';
    const auto& fid = factors[i]->id();
    if (fid.find('*') != std::string::npos) {
      id += '(' + fid + ')';
    } else {
      id += fid;
    }
  }
  return id;
}

}  // namespace

ProductSet::ProductSet(std::vector<SetRef> factors, SetRef carrier)
    : factors_(std::move(factors)), carrier_(std::move(carrier)) {}

ProductSet::ProductSet(std::vector<SetRef> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) {
    throw Error(Errc::InvalidArgument, "product of zero factors");
  }
  std::size_t total = 1;
  for (const auto& f : factors_) total *= f->size();
  std::vector<std::string> labels;
  labels.reserve(total);
  std::vector<Index> digits(factors_.size(), 0);
  for (std::size_t i = 0; i < total; ++i) {
    std::string label = "(";
    for (std::size_t k = 0; k < factors_.size(); ++k) {
      if (k) label += ',';
      label += factors_[k]->label(digits[k]);
    }
    label += ')';
    labels.push_back(std::move(label));
    for (std::size_t k = factors_.size(); k-- > 0;) {
      if (++digits[k] < factors_[k]->size()) break;
      digits[k] = 0;
    }
  }
  carrier_ = SetRef(new FiniteSet(product_id(factors_), std::move(labels), factors_));
}

ProductSet ProductSet::of(const SetRef& carrier) {
  if (carrier->factors().empty()) {
    throw Error(Errc::TypeMismatch, carrier->id() + " is not a product set");
  }
  return ProductSet(carrier->factors(), carrier);
}

Index ProductSet::index(std::span<const Index> tuple) const {
  if (tuple.size() != factors_.size()) {
    throw Error(Errc::InvalidArgument, "tuple arity does not match product");
  }
  Index i = 0;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (tuple[k] >= factors_[k]->size()) {
      throw Error(Errc::InvalidArgument, "tuple component out of range");
    }
    i = i * static_cast<Index>(factors_[k]->size()) + tuple[k];
  }
  return i;
}

std::vector<Index> ProductSet::tuple(Index i) const {
  if (i >= carrier_->size()) {
    throw Error(Errc::InvalidArgument, "product index out of range");
  }
  std::vector<Index> t(factors_.size());
  for (std::size_t k = factors_.size(); k-- > 0;) {
    auto n = static_cast<Index>(factors_[k]->size());
    t[k] = i % n;
    i /= n;
  }
  return t;
}

FinMap::FinMap(std::string name, SetRef dom, SetRef cod, std::vector<Index> table)
    : name_(std::move(name)), dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
  if (table_.size() != dom_->size()) {
    throw Error(Errc::TypeMismatch, "table of " + name_ + " has length " +
                                        std::to_string(table_.size()) + ", domain " +
                                        dom_->id() + " has " + std::to_string(dom_->size()));
  }
  for (Index v : table_) {
    if (v >= cod_->size()) {
      throw Error(Errc::TypeMismatch, "table of " + name_ + " leaves codomain " + cod_->id());
    }
  }
}

FinMap FinMap::renamed(std::string name) const {
  FinMap copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

bool operator==(const FinMap& a, const FinMap& b) {
  return a.dom_->id() == b.dom_->id() && a.cod_->id() == b.cod_->id() && a.table_ == b.table_;
}

Subset Subset::make(SetRef of, std::vector<Index> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!members.empty() && members.back() >= of->size()) {
    throw Error(Errc::SubsetDomainMismatch, "member out of range for " + of->id());
  }
  return Subset{std::move(of), std::move(members)};
}

FinMap build_map(std::string name, SetRef dom, SetRef cod,
                 std::span<const std::pair<std::string, std::string>> assignments) {
  constexpr Index unset = std::numeric_limits<Index>::max();
  std::vector<Index> table(dom->size(), unset);
  for (const auto& [from, to] : assignments) {
    auto x = dom->index_of(from);
    if (!x) throw Error(Errc::UnknownLabel, from);
    auto y = cod->index_of(to);
    if (!y) throw Error(Errc::UnknownLabel, to);
    if (table[*x] != unset) throw Error(Errc::DuplicateAssignment, from);
    table[*x] = *y;
  }
  for (Index x = 0; x < table.size(); ++x) {
    if (table[x] == unset) throw Error(Errc::MissingAssignment, dom->label(x));
  }
  return FinMap(std::move(name), std::move(dom), std::move(cod), std::move(table));
}

std::string describe_type(const FinMap& f) {
  return f.name() + ": " + f.dom()->id() + " -> " + f.cod()->id();
}

FinMap compose(const FinMap& g, const FinMap& f) {
  if (f.cod()->id() != g.dom()->id()) {
    throw Error(Errc::TypeMismatch,
                "cannot compose " + describe_type(g) + " after " + describe_type(f));
  }
  std::vector<Index> table(f.size());
  for (Index x = 0; x < f.size(); ++x) table[x] = g(f(x));
  return FinMap(g.name() + "∘" + f.name(), f.dom(), g.cod(), std::move(table));
}

FinMap compose_all(std::span<const FinMap> maps) {
  if (maps.empty()) throw Error(Errc::InvalidArgument, "empty composition");
  FinMap acc = maps.back();
  for (std::size_t i = maps.size() - 1; i-- > 0;) acc = compose(maps[i], acc);
  return acc;
}

FinMap identity(const SetRef& x) {
  std::vector<Index> table(x->size());
  std::iota(table.begin(), table.end(), Index{0});
  return FinMap("Id_" + x->id(), x, x, std::move(table));
}

bool is_identity(const FinMap& f) {
  if (!f.is_endo()) return false;
  for (Index x = 0; x < f.size(); ++x) {
    if (f(x) != x) return false;
  }
  return true;
}

bool is_idempotent(const FinMap& f) {
  if (!f.is_endo()) return false;
  for (Index x = 0; x < f.size(); ++x) {
    if (f(f(x)) != f(x)) return false;
  }
  return true;
}

std::vector<Index> image(const FinMap& f) {
  std::vector<bool> hit(f.cod()->size(), false);
  for (Index v : f.table()) hit[v] = true;
  std::vector<Index> out;
  for (Index y = 0; y < hit.size(); ++y) {
    if (hit[y]) out.push_back(y);
  }
  return out;
}

MapClass classify_map(const FinMap& f) {
  MapClass c;
  std::vector<bool> hit(f.cod()->size(), false);
  c.injective = true;
  for (Index v : f.table()) {
    if (hit[v]) c.injective = false;
    hit[v] = true;
  }
  c.surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  c.bijective = c.injective && c.surjective;
  if (f.is_endo()) c.idempotent = is_idempotent(f);
  return c;
}

Subset direct_image(const FinMap& f, const Subset& a) {
  if (a.of->id() != f.dom()->id()) {
    throw Error(Errc::SubsetDomainMismatch, a.of->id() + " is not the domain of " + f.name());
  }
  std::vector<Index> out;
  out.reserve(a.members.size());
  for (Index x : a.members) out.push_back(f(x));
  return Subset::make(f.cod(), std::move(out));
}

Subset inverse_image(const FinMap& f, const Subset& b) {
  if (b.of->id() != f.cod()->id()) {
    throw Error(Errc::SubsetDomainMismatch, b.of->id() + " is not the codomain of " + f.name());
  }
  std::vector<bool> in(f.cod()->size(), false);
  for (Index y : b.members) in[y] = true;
  std::vector<Index> out;
  for (Index x = 0; x < f.size(); ++x) {
    if (in[f(x)]) out.push_back(x);
  }
  return Subset{f.dom(), std::move(out)};
}

SubsetRegularity check_subset_regularity(const FinMap& f, const FinMap& g, RegularityMode mode) {
  if (g.dom()->id() != f.cod()->id() || g.cod()->id() != f.dom()->id()) {
    throw Error(Errc::TypeMismatch, describe_type(g) + " is not typed against " + describe_type(f));
  }
  // image: outer = f, inner = g; reflexive: the roles swap.
  const FinMap& outer = mode == RegularityMode::image ? f : g;
  const FinMap& inner = mode == RegularityMode::image ? g : f;
  const SetRef& base = outer.dom();
  constexpr std::size_t max_bits = 24;
  if (base->size() > max_bits) {
    throw Error(Errc::SearchSpaceTooLarge,
                "subset sweep over " + std::to_string(base->size()) + " elements");
  }

  SubsetRegularity result;
  const std::uint64_t count = std::uint64_t{1} << base->size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<Index> members;
    for (Index i = 0; i < base->size(); ++i) {
      if (mask >> i & 1U) members.push_back(i);
    }
    Subset a{base, std::move(members)};
    Subset fa = direct_image(outer, a);
    Subset round = direct_image(outer, direct_image(inner, fa));
    if (round == fa) continue;
    result.holds = false;
    if (!result.witness ||
        std::lexicographical_compare(a.members.begin(), a.members.end(),
                                     result.witness->members.begin(),
                                     result.witness->members.end())) {
      result.witness = std::move(a);
    }
  }
  return result;
}

FinMap tensor(const FinMap& f, const FinMap& g) {
  ProductSet dom({f.dom(), g.dom()});
  ProductSet cod({f.cod(), g.cod()});
  const auto nf = static_cast<Index>(f.size());
  const auto ng = static_cast<Index>(g.size());
  const auto cg = static_cast<Index>(g.cod()->size());
  std::vector<Index> table(static_cast<std::size_t>(nf) * ng);
  for (Index x = 0; x < nf; ++x) {
    for (Index y = 0; y < ng; ++y) table[x * ng + y] = f(x) * cg + g(y);
  }
  return FinMap(f.name() + "⊗" + g.name(), dom.carrier(), cod.carrier(), std::move(table));
}

std::uint64_t map_space_size(std::size_t dom_size, std::size_t cod_size) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < dom_size; ++i) {
    if (cod_size == 0) return 0;
    if (total > std::numeric_limits<std::uint64_t>::max() / cod_size) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= cod_size;
  }
  return total;
}

void for_each_table(std::size_t dom_size, std::size_t cod_size,
                    const std::function<bool(const std::vector<Index>&)>& visit) {
  if (cod_size == 0 && dom_size > 0) return;
  std::vector<Index> table(dom_size, 0);
  while (true) {
    if (!visit(table)) return;
    bool advanced = false;
    for (std::size_t k = dom_size; k-- > 0;) {
      if (++table[k] < cod_size) {
        advanced = true;
        break;
      }
      table[k] = 0;
    }
    if (!advanced) return;
  }
}

}  // namespace regcat
