#include "oddwedge/class_function.hpp"

#include <algorithm>
#include <stdexcept>

namespace oddwedge {

ClassFunction::ClassFunction(ClassStructurePtr cs, std::vector<cplx> values)
    : cs_(std::move(cs)), v_(std::move(values)) {
  if (!cs_) throw std::invalid_argument("class function without class structure");
  if (static_cast<int>(v_.size()) != cs_->num_classes)
    throw std::invalid_argument("class function length != number of classes");
}

ClassFunction ClassFunction::constant(ClassStructurePtr cs, cplx v) {
  std::vector<cplx> vals(cs->num_classes, v);
  return ClassFunction(std::move(cs), std::move(vals));
}

ClassFunction ClassFunction::delta(ClassStructurePtr cs, int cls) {
  if (cls < 0 || cls >= cs->num_classes) throw std::invalid_argument("delta: bad class index");
  std::vector<cplx> vals(cs->num_classes, 0.0);
  vals[cls] = 1.0;
  return ClassFunction(std::move(cs), std::move(vals));
}

ClassFunction ClassFunction::scaled(cplx s) const {
  std::vector<cplx> vals(v_);
  for (auto& x : vals) x *= s;
  return ClassFunction(cs_, std::move(vals));
}

double ClassFunction::sup_distance(const ClassFunction& other) const {
  if (!cs_->compatible_with(*other.cs_))
    throw std::invalid_argument("class functions live on different groups");
  double d = 0;
  for (size_t i = 0; i < v_.size(); ++i) d = std::max(d, std::abs(v_[i] - other.v_[i]));
  return d;
}

static void check_same(const ClassFunction& a, const ClassFunction& b) {
  if (!a.structure()->compatible_with(*b.structure()))
    throw std::invalid_argument("class functions live on different groups");
}

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
  check_same(a, b);
  std::vector<cplx> vals(a.v_);
  for (size_t i = 0; i < vals.size(); ++i) vals[i] += b.v_[i];
  return ClassFunction(a.cs_, std::move(vals));
}

ClassFunction operator-(const ClassFunction& a, const ClassFunction& b) {
  check_same(a, b);
  std::vector<cplx> vals(a.v_);
  for (size_t i = 0; i < vals.size(); ++i) vals[i] -= b.v_[i];
  return ClassFunction(a.cs_, std::move(vals));
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
  check_same(a, b);
  std::vector<cplx> vals(a.v_);
  for (size_t i = 0; i < vals.size(); ++i) vals[i] *= b.v_[i];
  return ClassFunction(a.cs_, std::move(vals));
}

ClassFunction adams(const ClassFunction& f, long long j) {
  const auto& cs = f.structure();
  std::vector<cplx> vals(cs->num_classes);
  for (int c = 0; c < cs->num_classes; ++c) vals[c] = f[cs->power_class(j, c)];
  return ClassFunction(cs, std::move(vals));
}

ClassFunction conjugate_inverse(const ClassFunction& f) {
  const auto& cs = f.structure();
  std::vector<cplx> vals(cs->num_classes);
  for (int c = 0; c < cs->num_classes; ++c) vals[c] = std::conj(f[cs->inverse_class(c)]);
  return ClassFunction(cs, std::move(vals));
}

bool is_real_class_function(const ClassFunction& f, double tol) {
  return f.sup_distance(conjugate_inverse(f)) <= tol;
}

ClassFunction conjugation_character(const ClassStructurePtr& cs) {
  std::vector<cplx> vals(cs->num_classes);
  for (int c = 0; c < cs->num_classes; ++c)
    vals[c] = static_cast<double>(cs->group_order / cs->sizes[c]);
  return ClassFunction(cs, std::move(vals));
}

ClassFunction regular_character(const ClassStructurePtr& cs) {
  std::vector<cplx> vals(cs->num_classes, 0.0);
  vals[0] = static_cast<double>(cs->group_order);
  return ClassFunction(cs, std::move(vals));
}

std::vector<cplx> newton_elementary(std::span<const cplx> power_sums) {
  const size_t d = power_sums.size();
  std::vector<cplx> e(d + 1, 0.0);
  e[0] = 1.0;
  for (size_t n = 1; n <= d; ++n) {
    cplx acc = 0.0;
    double sign = 1.0;
    for (size_t i = 1; i <= n; ++i) {
      acc += sign * e[n - i] * power_sums[i - 1];
      sign = -sign;
    }
    e[n] = acc / static_cast<double>(n);
  }
  return e;
}

ClassFunction wedge_character_direct(const ClassFunction& chi, int dim) {
  if (dim < 1) throw std::invalid_argument("wedge_character_direct: dimension must be a positive integer");
  const auto& cs = chi.structure();
  std::vector<cplx> vals(cs->num_classes);
  std::vector<cplx> p(dim);
  for (int c = 0; c < cs->num_classes; ++c) {
    for (int j = 1; j <= dim; ++j) p[j - 1] = chi[cs->power_class(j, c)];
    const auto e = newton_elementary(p);
    cplx s = 0.0;
    for (const auto& en : e) s += en;
    vals[c] = s;
  }
  return ClassFunction(cs, std::move(vals));
}

}  // namespace oddwedge
