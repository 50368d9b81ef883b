#pragma once

#include <cmath>
#include <vector>

#include "caplab/capacity.hpp"
#include "caplab/space.hpp"

namespace caplab {

// A measurable real-valued function on a finite space: one finite value per
// point.
struct MeasurableFn {
  FiniteSpace space;
  std::vector<double> values;

  MeasurableFn() = default;
  MeasurableFn(FiniteSpace sp, std::vector<double> vals);

  int n() const { return space.n; }
  double operator[](int i) const { return values[i]; }

  bool operator==(const MeasurableFn& o) const {
    return space == o.space && values == o.values;
  }
};

MeasurableFn indicator(const FiniteSpace& sp, mask_t a, double scale = 1.0);
MeasurableFn constant_fn(const FiniteSpace& sp, double c);

MeasurableFn fn_abs(const MeasurableFn& f);
MeasurableFn fn_add(const MeasurableFn& f, const MeasurableFn& g);
MeasurableFn fn_sub(const MeasurableFn& f, const MeasurableFn& g);
MeasurableFn fn_scale(double a, const MeasurableFn& f);
MeasurableFn fn_abs_diff(const MeasurableFn& f, const MeasurableFn& g);
// f with the coordinates in `a` replaced by zero
MeasurableFn fn_zeroed_on(const MeasurableFn& f, mask_t a);

bool fn_nonnegative(const MeasurableFn& f);
double fn_max_abs(const MeasurableFn& f);

// {f > t} resp. {f >= t} as a subset mask
mask_t level_gt(const MeasurableFn& f, double t);
mask_t level_ge(const MeasurableFn& f, double t);

void require_same_space(const FiniteSpace& a, const FiniteSpace& b, const char* where);

}  // namespace caplab
