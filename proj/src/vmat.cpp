#include "stonet/vmat.hpp"

#include <sstream>

namespace stonet {

namespace {

  void require_same_quantale(const VMatrix& a, const VMatrix& b) {
    if (a.quantale_ptr() != b.quantale_ptr()
        && a.quantale().table().names != b.quantale().table().names) {
      throw ShapeError("matrices over different quantales");
    }
  }

  std::string shape(const VMatrix& m) {
    return std::to_string(m.source()) + "->" + std::to_string(m.target());
  }

}  // namespace

VMatrix::VMatrix(QuantalePtr q, std::size_t source, std::size_t target)
    : VMatrix(q, source, target, q->bottom()) {}

VMatrix::VMatrix(QuantalePtr q, std::size_t source, std::size_t target, Elem fill)
    : q_(std::move(q)),
      source_(source),
      target_(target),
      entries_(source * target, fill) {}

VMatrix VMatrix::identity(QuantalePtr q, std::size_t n) {
  VMatrix m(q, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.set(i, i, q->unit());
  }
  return m;
}

VMatrix VMatrix::from_map(QuantalePtr q, const FinMap& f) {
  VMatrix m(q, f.domain(), f.codomain);
  for (std::size_t x = 0; x < f.domain(); ++x) {
    m.set(f(x), x, q->unit());
  }
  return m;
}

bool VMatrix::leq(const VMatrix& other) const {
  if (source_ != other.source_ || target_ != other.target_) {
    throw ShapeError("cannot compare matrices of shapes " + shape(*this) + " and "
                     + shape(other));
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!q_->leq(entries_[i], other.entries_[i])) {
      return false;
    }
  }
  return true;
}

std::string VMatrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t y = 0; y < target_; ++y) {
    out << (y ? "; " : "");
    for (std::size_t x = 0; x < source_; ++x) {
      out << (x ? " " : "") << q_->name((*this)(y, x));
    }
  }
  out << "]";
  return out.str();
}

VMatrix compose(const VMatrix& s, const VMatrix& r) {
  if (s.source() != r.target()) {
    throw ShapeError("compose: " + shape(s) + " after " + shape(r));
  }
  require_same_quantale(s, r);
  const Quantale& q = r.quantale();
  VMatrix out(r.quantale_ptr(), r.source(), s.target());
  for (std::size_t z = 0; z < s.target(); ++z) {
    for (std::size_t x = 0; x < r.source(); ++x) {
      Elem acc = q.bottom();
      for (std::size_t y = 0; y < r.target(); ++y) {
        acc = q.join(acc, q.tensor(s(z, y), r(y, x)));
      }
      out.set(z, x, acc);
    }
  }
  return out;
}

VMatrix involution(const VMatrix& r) {
  VMatrix out(r.quantale_ptr(), r.target(), r.source());
  for (std::size_t y = 0; y < r.target(); ++y) {
    for (std::size_t x = 0; x < r.source(); ++x) {
      out.set(x, y, r(y, x));
    }
  }
  return out;
}

VMatrix extension(const VMatrix& t, const VMatrix& r) {
  if (t.source() != r.source()) {
    throw ShapeError("extension: " + shape(t) + " along " + shape(r));
  }
  require_same_quantale(t, r);
  const Quantale& q = r.quantale();
  VMatrix out(r.quantale_ptr(), r.target(), t.target());
  for (std::size_t z = 0; z < t.target(); ++z) {
    for (std::size_t y = 0; y < r.target(); ++y) {
      Elem acc = q.top();
      for (std::size_t x = 0; x < r.source(); ++x) {
        acc = q.meet(acc, q.hom(r(y, x), t(z, x)));
      }
      out.set(z, y, acc);
    }
  }
  return out;
}

VMatrix lifting(const VMatrix& r, const VMatrix& q_mat) {
  if (r.target() != q_mat.target()) {
    throw ShapeError("lifting: " + shape(r) + " through " + shape(q_mat));
  }
  require_same_quantale(r, q_mat);
  const Quantale& q = r.quantale();
  VMatrix out(r.quantale_ptr(), q_mat.source(), r.source());
  for (std::size_t x = 0; x < r.source(); ++x) {
    for (std::size_t z = 0; z < q_mat.source(); ++z) {
      Elem acc = q.top();
      for (std::size_t y = 0; y < r.target(); ++y) {
        acc = q.meet(acc, q.hom(r(y, x), q_mat(y, z)));
      }
      out.set(x, z, acc);
    }
  }
  return out;
}

namespace {

  template <typename Op>
  VMatrix entrywise(const VMatrix& a, const VMatrix& b, Op op) {
    if (a.source() != b.source() || a.target() != b.target()) {
      throw ShapeError("entrywise operation on " + shape(a) + " and " + shape(b));
    }
    require_same_quantale(a, b);
    VMatrix out = a;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
      out.entries()[i] = op(a.entries()[i], b.entries()[i]);
    }
    return out;
  }

}  // namespace

VMatrix matrix_join(const VMatrix& a, const VMatrix& b) {
  const Quantale& q = a.quantale();
  return entrywise(a, b, [&](Elem x, Elem y) { return q.join(x, y); });
}

VMatrix matrix_meet(const VMatrix& a, const VMatrix& b) {
  const Quantale& q = a.quantale();
  return entrywise(a, b, [&](Elem x, Elem y) { return q.meet(x, y); });
}

std::size_t encode(const VMatrix& m) {
  std::size_t const radix = m.quantale().size();
  std::size_t code = 0;
  for (Elem e : m.entries()) {
    code = code * radix + e.index();
  }
  return code;
}

VMatrix decode(QuantalePtr q, std::size_t source, std::size_t target, std::size_t code) {
  std::size_t const radix = q->size();
  VMatrix m(q, source, target);
  auto& es = m.entries();
  for (std::size_t i = es.size(); i > 0; --i) {
    es[i - 1] = Elem(code % radix);
    code /= radix;
  }
  return m;
}

}  // namespace stonet
