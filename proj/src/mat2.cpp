#include "repvar2/mat2.hpp"

#include <algorithm>

namespace repvar2 {

namespace {
const FieldSpec& common_spec(const Mat2& a, const Mat2& b) {
  if (!a.spec().same_field(b.spec())) throw FieldMismatchError();
  return a.spec();
}
}  // namespace

Mat2 Mat2::unit(const FieldSpec& spec, int i, int j) {
  std::array<uint32_t, 4> e{0, 0, 0, 0};
  e[(i - 1) * 2 + (j - 1)] = 1;
  return Mat2(spec, e);
}

Mat2 Mat2::operator+(const Mat2& o) const {
  const FieldSpec& f = common_spec(*this, o);
  return Mat2(f, f.add_idx(e_[0], o.e_[0]), f.add_idx(e_[1], o.e_[1]),
              f.add_idx(e_[2], o.e_[2]), f.add_idx(e_[3], o.e_[3]));
}

Mat2 Mat2::operator-(const Mat2& o) const {
  const FieldSpec& f = common_spec(*this, o);
  return Mat2(f, f.sub_idx(e_[0], o.e_[0]), f.sub_idx(e_[1], o.e_[1]),
              f.sub_idx(e_[2], o.e_[2]), f.sub_idx(e_[3], o.e_[3]));
}

Mat2 Mat2::operator*(const Mat2& o) const {
  const FieldSpec& f = common_spec(*this, o);
  auto dot = [&f](uint32_t a, uint32_t b, uint32_t c, uint32_t d) {
    return f.add_idx(f.mul_idx(a, b), f.mul_idx(c, d));
  };
  return Mat2(f, dot(e_[0], o.e_[0], e_[1], o.e_[2]), dot(e_[0], o.e_[1], e_[1], o.e_[3]),
              dot(e_[2], o.e_[0], e_[3], o.e_[2]), dot(e_[2], o.e_[1], e_[3], o.e_[3]));
}

Mat2 Mat2::scaled(const FieldElement& c) const {
  if (!spec_->same_field(c.spec())) throw FieldMismatchError();
  uint32_t ci = c.index();
  return Mat2(*spec_, spec_->mul_idx(ci, e_[0]), spec_->mul_idx(ci, e_[1]),
              spec_->mul_idx(ci, e_[2]), spec_->mul_idx(ci, e_[3]));
}

Mat2 Mat2::operator-() const {
  return Mat2(*spec_, spec_->neg_idx(e_[0]), spec_->neg_idx(e_[1]), spec_->neg_idx(e_[2]),
              spec_->neg_idx(e_[3]));
}

FieldElement Mat2::trace() const {
  return FieldElement(*spec_, spec_->add_idx(e_[0], e_[3]));
}

FieldElement Mat2::det() const {
  return FieldElement(
      *spec_, spec_->sub_idx(spec_->mul_idx(e_[0], e_[3]), spec_->mul_idx(e_[1], e_[2])));
}

FieldElement Mat2::disc() const {
  uint32_t t = spec_->add_idx(e_[0], e_[3]);
  uint32_t d = spec_->sub_idx(spec_->mul_idx(e_[0], e_[3]), spec_->mul_idx(e_[1], e_[2]));
  uint32_t two = spec_->add_idx(1, 1);
  uint32_t four = spec_->mul_idx(two, two);
  return FieldElement(*spec_,
                      spec_->sub_idx(spec_->mul_idx(t, t), spec_->mul_idx(four, d)));
}

bool Mat2::operator==(const Mat2& o) const {
  return e_ == o.e_ && spec_->same_field(o.spec());
}

std::string Mat2::str() const {
  return "[[" + entry(1, 1).str() + "," + entry(1, 2).str() + "],[" + entry(2, 1).str() +
         "," + entry(2, 2).str() + "]]";
}

CharData char_data(const Mat2& a) { return CharData{a.trace(), a.det(), a.disc()}; }

Mat2 inverse(const Mat2& a) {
  const FieldSpec& f = a.spec();
  FieldElement d = a.det();
  if (d.is_zero()) throw SingularMatrixError();
  uint32_t di = f.inv_idx(d.index());
  const auto& e = a.entries();
  return Mat2(f, f.mul_idx(di, e[3]), f.mul_idx(di, f.neg_idx(e[1])),
              f.mul_idx(di, f.neg_idx(e[2])), f.mul_idx(di, e[0]));
}

PglElement::PglElement(const Mat2& any_lift)
    : rep_(any_lift), rep_inv_(Mat2::zero(any_lift.spec())) {
  const FieldSpec& f = any_lift.spec();
  if (any_lift.det().is_zero()) throw SingularMatrixError();
  uint32_t lead = 0;
  for (uint32_t v : any_lift.entries()) {
    if (v != 0) {
      lead = v;
      break;
    }
  }
  rep_ = any_lift.scaled(FieldElement(f, f.inv_idx(lead)));
  rep_inv_ = inverse(rep_);
}

Mat2 PglElement::conjugate(const Mat2& a) const { return rep_ * a * rep_inv_; }

std::vector<PglElement> enumerate_pgl2(const FieldSpec& spec) {
  uint32_t q = spec.order();
  if (q > 64) throw TooLargeError("PGL_2 enumeration not supported beyond q = 64");
  std::vector<PglElement> out;
  out.reserve(static_cast<size_t>(q) * q * q - q);
  std::array<uint32_t, 4> e{};
  for (uint64_t idx = 0, total = static_cast<uint64_t>(q) * q * q * q; idx < total; ++idx) {
    uint64_t v = idx;
    for (int i = 0; i < 4; ++i) {
      e[i] = static_cast<uint32_t>(v % q);
      v /= q;
    }
    uint32_t lead = 0;
    for (uint32_t x : e) {
      if (x != 0) {
        lead = x;
        break;
      }
    }
    if (lead != 1) continue;  // canonical representatives only
    Mat2 a(spec, e);
    if (a.det().is_zero()) continue;
    out.emplace_back(a);
  }
  return out;
}

namespace {

// Row-echelon workspace over the 4-dimensional entry space of M_2.
struct Echelon {
  const FieldSpec* f;
  std::array<std::array<uint32_t, 4>, 4> rows{};
  std::array<int, 4> pivot{};
  int dim = 0;

  // Reduces v against the basis; if independent, normalizes it, inserts it
  // and back-substitutes to keep reduced row-echelon form. Returns true if
  // the dimension grew.
  bool insert(std::array<uint32_t, 4> v) {
    for (int r = 0; r < dim; ++r) {
      uint32_t c = v[pivot[r]];
      if (c == 0) continue;
      for (int j = 0; j < 4; ++j)
        v[j] = f->sub_idx(v[j], f->mul_idx(c, rows[r][j]));
    }
    int p = -1;
    for (int j = 0; j < 4; ++j) {
      if (v[j] != 0) {
        p = j;
        break;
      }
    }
    if (p < 0) return false;
    uint32_t inv = f->inv_idx(v[p]);
    for (int j = 0; j < 4; ++j) v[j] = f->mul_idx(inv, v[j]);
    for (int r = 0; r < dim; ++r) {
      uint32_t c = rows[r][p];
      if (c == 0) continue;
      for (int j = 0; j < 4; ++j)
        rows[r][j] = f->sub_idx(rows[r][j], f->mul_idx(c, v[j]));
    }
    rows[dim] = v;
    pivot[dim] = p;
    ++dim;
    return true;
  }

  std::array<uint32_t, 4> product(int i, int j) const {
    const auto& a = rows[i];
    const auto& b = rows[j];
    auto dot = [this](uint32_t x, uint32_t y, uint32_t z, uint32_t w) {
      return f->add_idx(f->mul_idx(x, y), f->mul_idx(z, w));
    };
    return {dot(a[0], b[0], a[1], b[2]), dot(a[0], b[1], a[1], b[3]),
            dot(a[2], b[0], a[3], b[2]), dot(a[2], b[1], a[3], b[3])};
  }
};

}  // namespace

SubalgebraBasis subalgebra_dim(std::span<const Mat2> tuple) {
  if (tuple.empty()) throw EmptyTupleError();
  const FieldSpec& f = tuple.front().spec();
  for (const Mat2& a : tuple)
    if (!f.same_field(a.spec())) throw FieldMismatchError();

  Echelon ech;
  ech.f = &f;
  ech.insert({1, 0, 0, 1});
  for (const Mat2& a : tuple) {
    if (ech.dim == 4) break;
    ech.insert(a.entries());
  }
  // Close under multiplication. The dimension strictly grows or the basis
  // is stable, so at most three rounds happen in dimension 4.
  bool grew = true;
  while (grew && ech.dim < 4) {
    grew = false;
    int d = ech.dim;
    for (int i = 0; i < d && ech.dim < 4; ++i)
      for (int j = 0; j < d && ech.dim < 4; ++j)
        if (ech.insert(ech.product(i, j))) grew = true;
  }

  SubalgebraBasis out;
  out.dim = ech.dim;
  // Rows sorted by pivot position give the canonical reduced echelon basis.
  std::array<int, 4> order{0, 1, 2, 3};
  std::sort(order.begin(), order.begin() + ech.dim,
            [&ech](int a, int b) { return ech.pivot[a] < ech.pivot[b]; });
  for (int r = 0; r < ech.dim; ++r) out.basis.emplace_back(f, ech.rows[order[r]]);
  return out;
}

}  // namespace repvar2
