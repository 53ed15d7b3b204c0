#include "stonet/quantale.hpp"

#include <algorithm>
#include <sstream>

#include "stonet/finset.hpp"

namespace stonet {

namespace {

  constexpr std::size_t kMaxCarrier = 64;

  std::optional<std::size_t> least_upper_bound(const QuantaleTable& t,
                                               std::size_t a,
                                               std::size_t b) {
    std::size_t const n = t.names.size();
    auto le = [&](std::size_t x, std::size_t y) { return t.leq[x * n + y]; };
    std::optional<std::size_t> best;
    for (std::size_t c = 0; c < n; ++c) {
      if (!le(a, c) || !le(b, c)) {
        continue;
      }
      bool least = true;
      for (std::size_t d = 0; d < n && least; ++d) {
        if (le(a, d) && le(b, d) && !le(c, d)) {
          least = false;
        }
      }
      if (least) {
        best = c;
        break;
      }
    }
    return best;
  }

  std::optional<std::size_t> least_element(const QuantaleTable& t) {
    std::size_t const n = t.names.size();
    for (std::size_t c = 0; c < n; ++c) {
      bool least = true;
      for (std::size_t d = 0; d < n && least; ++d) {
        least = t.leq[c * n + d];
      }
      if (least) {
        return c;
      }
    }
    return std::nullopt;
  }

  std::string triple(const QuantaleTable& t,
                     std::size_t a,
                     std::size_t b,
                     std::size_t c) {
    return "(" + t.names[a] + ", " + t.names[b] + ", " + t.names[c] + ")";
  }

  std::string pair(const QuantaleTable& t, std::size_t a, std::size_t b) {
    return "(" + t.names[a] + ", " + t.names[b] + ")";
  }

}  // namespace

QuantaleReport validate(const QuantaleTable& t) {
  QuantaleReport report;
  auto fail = [&](std::string law, std::string witness) {
    report.violations.push_back({std::move(law), std::move(witness)});
  };

  std::size_t const n = t.names.size();
  if (n == 0) {
    fail("nonempty-carrier", "carrier is empty");
    return report;
  }
  if (n > kMaxCarrier) {
    fail("carrier-size", std::to_string(n) + " elements exceeds the supported "
                             + std::to_string(kMaxCarrier));
    return report;
  }
  if (t.leq.size() != n * n) {
    fail("order-totality", "order table has " + std::to_string(t.leq.size())
                               + " entries, expected " + std::to_string(n * n));
    return report;
  }
  if (t.tensor.size() != n * n) {
    fail("tensor-totality", "tensor table has " + std::to_string(t.tensor.size())
                                + " entries, expected " + std::to_string(n * n));
    return report;
  }
  for (std::size_t i = 0; i < n * n; ++i) {
    if (t.tensor[i] >= n) {
      fail("tensor-range", pair(t, i / n, i % n) + " maps outside the carrier");
      return report;
    }
  }
  if (t.unit >= n) {
    fail("unit-range", "unit index outside the carrier");
    return report;
  }

  auto le = [&](std::size_t x, std::size_t y) { return t.leq[x * n + y]; };
  auto ten = [&](std::size_t x, std::size_t y) { return t.tensor[x * n + y]; };

  // Partial order.
  for (std::size_t a = 0; a < n; ++a) {
    if (!le(a, a)) {
      fail("order-reflexivity", t.names[a]);
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && le(a, b) && le(b, a)) {
        fail("order-antisymmetry", pair(t, a, b));
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (le(a, b) && le(b, c) && !le(a, c)) {
          fail("order-transitivity", triple(t, a, b, c));
        }
      }
    }
  }
  if (!report.ok()) {
    return report;
  }

  // Completeness: a finite poset with a least element and all binary joins
  // has joins of all subsets.
  auto bottom = least_element(t);
  if (!bottom) {
    fail("completeness", "no least element (join of the empty set)");
  }
  std::vector<std::size_t> join(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto j = least_upper_bound(t, a, b);
      if (!j) {
        fail("completeness", "no join for " + pair(t, a, b));
      } else {
        join[a * n + b] = *j;
      }
    }
  }
  if (!report.ok()) {
    return report;
  }

  for (std::size_t a = 0; a < n; ++a) {
    if (ten(a, t.unit) != a || ten(t.unit, a) != a) {
      fail("unit", t.names[a]);
    }
    if (ten(a, *bottom) != *bottom || ten(*bottom, a) != *bottom) {
      fail("tensor-preserves-empty-join", t.names[a]);
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (ten(a, b) != ten(b, a)) {
        fail("commutativity", pair(t, a, b));
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (ten(ten(a, b), c) != ten(a, ten(b, c))) {
          fail("associativity", triple(t, a, b, c));
        }
        if (ten(a, join[b * n + c]) != join[ten(a, b) * n + ten(a, c)]) {
          fail("tensor-preserves-joins-right", triple(t, a, b, c));
        }
        if (ten(join[b * n + c], a) != join[ten(b, a) * n + ten(c, a)]) {
          fail("tensor-preserves-joins-left", triple(t, a, b, c));
        }
      }
    }
  }
  if (!report.ok()) {
    return report;
  }

  // Residuation, with hom(y, z) computed as the join of {x : x (x) y <= z}.
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t z = 0; z < n; ++z) {
      std::size_t h = *bottom;
      for (std::size_t x = 0; x < n; ++x) {
        if (le(ten(x, y), z)) {
          h = join[h * n + x];
        }
      }
      for (std::size_t x = 0; x < n; ++x) {
        if (le(ten(x, y), z) != le(x, h)) {
          fail("residuation", triple(t, x, y, z));
        }
      }
    }
  }
  return report;
}

Quantale Quantale::from_table(QuantaleTable table, std::string label) {
  auto report = validate(table);
  if (!report.ok()) {
    throw ValidationError(std::move(report.violations));
  }
  std::size_t const n = table.names.size();
  Quantale q;
  q.label_ = std::move(label);
  q.names_ = table.names;
  q.leq_ = table.leq;
  q.tensor_.resize(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    q.tensor_[i] = Elem(table.tensor[i]);
  }
  q.unit_ = Elem(table.unit);
  q.bottom_ = Elem(*least_element(table));
  q.join_.resize(n * n);
  q.meet_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      q.join_[a * n + b] = Elem(*least_upper_bound(table, a, b));
    }
  }
  q.top_ = q.bottom_;
  for (std::size_t a = 0; a < n; ++a) {
    q.top_ = q.join_[q.top_.index() * n + a];
  }
  // Meets as joins of lower bounds; the carrier is a complete lattice.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Elem m = q.bottom_;
      for (std::size_t c = 0; c < n; ++c) {
        if (q.leq_[c * n + a] && q.leq_[c * n + b]) {
          m = q.join_[m.index() * n + c];
        }
      }
      q.meet_[a * n + b] = m;
    }
  }
  q.hom_.resize(n * n);
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t z = 0; z < n; ++z) {
      Elem h = q.bottom_;
      for (std::size_t x = 0; x < n; ++x) {
        if (q.leq_[q.tensor_[x * n + y].index() * n + z]) {
          h = q.join_[h.index() * n + x];
        }
      }
      q.hom_[y * n + z] = h;
    }
  }
  q.table_ = std::move(table);
  return q;
}

Elem Quantale::join(std::span<const Elem> xs) const {
  Elem r = bottom_;
  for (Elem x : xs) {
    r = join(r, x);
  }
  return r;
}

Elem Quantale::meet(std::span<const Elem> xs) const {
  Elem r = top_;
  for (Elem x : xs) {
    r = meet(r, x);
  }
  return r;
}

std::optional<Elem> Quantale::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) {
      return Elem(i);
    }
  }
  return std::nullopt;
}

std::vector<Elem> Quantale::elements() const {
  std::vector<Elem> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) {
    out.emplace_back(i);
  }
  return out;
}

QuantalePtr make_two() {
  QuantaleTable t;
  t.names = {"0", "1"};
  t.leq = {true, true, false, true};
  t.tensor = {0, 0, 0, 1};
  t.unit = 1;
  return std::make_shared<const Quantale>(Quantale::from_table(std::move(t), "two"));
}

QuantalePtr make_goedel_chain(std::size_t n) {
  if (n < 2) {
    throw Error("goedel-chain needs at least 2 elements");
  }
  QuantaleTable t;
  for (std::size_t i = 0; i < n; ++i) {
    t.names.push_back(std::to_string(i));
  }
  t.leq.resize(n * n);
  t.tensor.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      t.leq[a * n + b] = a <= b;
      t.tensor[a * n + b] = std::min(a, b);
    }
  }
  t.unit = n - 1;
  return std::make_shared<const Quantale>(
      Quantale::from_table(std::move(t), "goedel-chain(" + std::to_string(n) + ")"));
}

QuantalePtr make_lawvere_chain(std::size_t n) {
  if (n < 2) {
    throw Error("lawvere-chain needs at least 2 elements");
  }
  // Index i < n-1 is the number i; index n-1 is infinity.
  std::size_t const inf = n - 1;
  std::size_t const largest = n - 2;
  QuantaleTable t;
  for (std::size_t i = 0; i < inf; ++i) {
    t.names.push_back(std::to_string(i));
  }
  t.names.push_back("inf");
  t.leq.resize(n * n);
  t.tensor.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      t.leq[a * n + b] = a >= b;
      std::size_t const sum = (a == inf || b == inf) ? inf : a + b;
      t.tensor[a * n + b] = sum > largest ? inf : sum;
    }
  }
  t.unit = 0;
  return std::make_shared<const Quantale>(
      Quantale::from_table(std::move(t), "lawvere-chain(" + std::to_string(n) + ")"));
}

QuantalePtr make_product(const Quantale& a, const Quantale& b) {
  std::size_t const na = a.size();
  std::size_t const nb = b.size();
  std::size_t const n = na * nb;
  QuantaleTable t;
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      t.names.push_back("(" + a.name(Elem(i)) + "," + b.name(Elem(j)) + ")");
    }
  }
  t.leq.resize(n * n);
  t.tensor.resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      Elem const xa(x / nb), xb(x % nb), ya(y / nb), yb(y % nb);
      t.leq[x * n + y] = a.leq(xa, ya) && b.leq(xb, yb);
      t.tensor[x * n + y] = pair_index(a.tensor(xa, ya).index(),
                                       b.tensor(xb, yb).index(), nb);
    }
  }
  t.unit = pair_index(a.unit().index(), b.unit().index(), nb);
  return std::make_shared<const Quantale>(Quantale::from_table(
      std::move(t), "product(" + a.label() + "," + b.label() + ")"));
}

QuantalePtr make_builtin(std::string_view name, std::size_t n) {
  if (name == "two") {
    return make_two();
  }
  if (name == "goedel-chain") {
    return make_goedel_chain(n);
  }
  if (name == "lawvere-chain") {
    return make_lawvere_chain(n);
  }
  throw Error("unknown quantale builder '" + std::string(name) + "'");
}

std::vector<bool> totally_below(const Quantale& q) {
  std::size_t const n = q.size();
  if (n > 20) {
    throw Error("totally_below: carrier too large for subset enumeration");
  }
  std::vector<bool> table(n * n, true);
  std::size_t const subsets = std::size_t{1} << n;
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    Elem sup = q.bottom();
    for (std::size_t s = 0; s < n; ++s) {
      if (mask >> s & 1u) {
        sup = q.join(sup, Elem(s));
      }
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (!q.leq(Elem(v), sup)) {
        continue;
      }
      for (std::size_t u = 0; u < n; ++u) {
        bool dominated = false;
        for (std::size_t s = 0; s < n && !dominated; ++s) {
          dominated = (mask >> s & 1u) && q.leq(Elem(u), Elem(s));
        }
        if (!dominated) {
          table[u * n + v] = false;
        }
      }
    }
  }
  return table;
}

FrmHypotheses check_frm_hypotheses(const Quantale& q) {
  FrmHypotheses h;
  std::ostringstream witness;
  std::size_t const n = q.size();
  h.top_is_unit = q.top() == q.unit();
  if (!h.top_is_unit) {
    witness << "top " << q.name(q.top()) << " != unit " << q.name(q.unit()) << "; ";
  }

  auto tb = totally_below(q);
  std::vector<Elem> below;
  for (std::size_t u = 0; u < n; ++u) {
    if (tb[u * n + q.unit().index()]) {
      below.emplace_back(u);
    }
  }
  h.below_unit_directed = !below.empty();
  if (below.empty()) {
    witness << "nothing is totally below the unit; ";
  }
  for (Elem u : below) {
    for (Elem v : below) {
      bool bounded = false;
      for (Elem w : below) {
        bounded = bounded || (q.leq(u, w) && q.leq(v, w));
      }
      if (!bounded && h.below_unit_directed) {
        h.below_unit_directed = false;
        witness << "no upper bound for " << q.name(u) << ", " << q.name(v)
                << " below the unit; ";
      }
    }
  }

  h.unit_join_prime = true;
  for (std::size_t u = 0; u < n && h.unit_join_prime; ++u) {
    for (std::size_t v = 0; v < n && h.unit_join_prime; ++v) {
      Elem const eu(u), ev(v);
      if (q.leq(q.unit(), q.join(eu, ev)) && !q.leq(q.unit(), eu)
          && !q.leq(q.unit(), ev)) {
        h.unit_join_prime = false;
        witness << "unit <= " << q.name(eu) << " v " << q.name(ev)
                << " but below neither; ";
      }
    }
  }
  h.witness = witness.str();
  return h;
}

}  // namespace stonet
