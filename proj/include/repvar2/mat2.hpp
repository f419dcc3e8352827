#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "repvar2/gf.hpp"

namespace repvar2 {

// 2x2 matrix over one FieldSpec, entries stored as element indices in scan
// order a11, a12, a21, a22.
class Mat2 {
 public:
  Mat2(const FieldSpec& spec, uint32_t a11, uint32_t a12, uint32_t a21, uint32_t a22)
      : spec_(&spec), e_{a11, a12, a21, a22} {}
  Mat2(const FieldSpec& spec, const std::array<uint32_t, 4>& e) : spec_(&spec), e_(e) {}

  static Mat2 zero(const FieldSpec& spec) { return Mat2(spec, 0, 0, 0, 0); }
  static Mat2 identity(const FieldSpec& spec) { return Mat2(spec, 1, 0, 0, 1); }
  // Matrix unit E_ij with a single 1 entry, i, j in {1, 2}.
  static Mat2 unit(const FieldSpec& spec, int i, int j);
  static Mat2 diag(const FieldSpec& spec, uint32_t a, uint32_t d) {
    return Mat2(spec, a, 0, 0, d);
  }
  static Mat2 scalar(const FieldSpec& spec, uint32_t a) { return diag(spec, a, a); }

  const FieldSpec& spec() const { return *spec_; }
  const std::array<uint32_t, 4>& entries() const { return e_; }
  FieldElement entry(int i, int j) const {
    return FieldElement(*spec_, e_[(i - 1) * 2 + (j - 1)]);
  }

  Mat2 operator+(const Mat2& o) const;
  Mat2 operator-(const Mat2& o) const;
  Mat2 operator*(const Mat2& o) const;
  Mat2 scaled(const FieldElement& c) const;
  Mat2 operator-() const;

  FieldElement trace() const;
  FieldElement det() const;
  // Discriminant of the characteristic polynomial, trace^2 - 4 det
  // (trace^2 in characteristic 2).
  FieldElement disc() const;

  bool is_scalar() const { return e_[1] == 0 && e_[2] == 0 && e_[0] == e_[3]; }
  bool is_zero() const { return e_ == std::array<uint32_t, 4>{0, 0, 0, 0}; }

  bool operator==(const Mat2& o) const;
  bool operator!=(const Mat2& o) const { return !(*this == o); }

  std::string str() const;

 private:
  const FieldSpec* spec_;
  std::array<uint32_t, 4> e_;
};

// trace, det and characteristic-polynomial discriminant in one call.
struct CharData {
  FieldElement trace, det, disc;
};
CharData char_data(const Mat2& a);

// Element of PGL_2(F_q), held as the canonical GL_2 representative scaled so
// that the first nonzero entry in scan order a11, a12, a21, a22 equals 1.
// Two invertible matrices normalize to the same representative iff they
// differ by a scalar.
class PglElement {
 public:
  explicit PglElement(const Mat2& any_lift);  // throws SingularMatrixError

  const Mat2& rep() const { return rep_; }
  const Mat2& rep_inv() const { return rep_inv_; }

  // rep * a * rep^-1; independent of the chosen GL_2 lift.
  Mat2 conjugate(const Mat2& a) const;

  PglElement operator*(const PglElement& o) const { return PglElement(rep_ * o.rep_); }
  bool operator==(const PglElement& o) const { return rep_ == o.rep_; }

 private:
  Mat2 rep_, rep_inv_;
};

// All q^3 - q elements of PGL_2(F_q) as canonical representatives, in
// ascending order of the representative's entry index vector (a11 least
// significant).
std::vector<PglElement> enumerate_pgl2(const FieldSpec& spec);

Mat2 inverse(const Mat2& a);  // throws SingularMatrixError

// Basis of the unital subalgebra of M_2 generated by a tuple, as reduced
// row-echelon vectors in the 4-dimensional entry space.
struct SubalgebraBasis {
  int dim = 0;
  std::vector<Mat2> basis;
};

// Dimension and echelon basis of the span closure of {I, A_1, ..., A_m}
// under matrix multiplication. The unital convention (I always in the
// algebra) makes the all-zero tuple land in dimension 1.
SubalgebraBasis subalgebra_dim(std::span<const Mat2> tuple);

}  // namespace repvar2
