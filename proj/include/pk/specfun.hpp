#pragma once

namespace pk {

// Gamma function via a 9-term Lanczos approximation (g = 7), with the
// reflection formula for arguments below 1/2. Accurate to ~1e-14 relative
// over the range used here.
double gamma_fn(double x);

// Surface area of the k-dimensional unit sphere, 2*pi^((k+1)/2) / Gamma((k+1)/2).
// sigma(0) = 2, sigma(1) = 2*pi, sigma(2) = 4*pi, sigma(3) = 2*pi^2.
double unit_sphere_area(int k);

// sin(sqrt(y))/sqrt(y) continued through y <= 0, where it equals
// sinh(sqrt(-y))/sqrt(-y). Entire in y; series is used near zero.
double sinc_sqrt(double y);

}  // namespace pk
