#ifndef MONO_GALLERY_HPP
#define MONO_GALLERY_HPP

#include <map>
#include <string>
#include <vector>

#include "mono/field.hpp"

namespace mono {

using GalleryParams = std::map<std::string, double>;

/// Deterministic generators for the example fields the checkers are
/// exercised against. Each entry fixes its own physical domain and mask
/// (square, U-shape, or slit annulus); `params` may override the
/// documented knobs. Unknown names or parameters are rejected.
///
/// Entries:
///   plane          a*x + b*y + c on [lo,hi]^2             (a=1 b=1 c=0 lo=-1 hi=1)
///   cubic          x^3 - x, constant in y, on [lo,hi]^2   (lo=-2 hi=2)
///   manfredi       piecewise angular function on [-1,1]^2 (discontinuous at 0)
///   step_band      -1 / 0 / +1 step with a flat middle rectangle (discontinuous)
///   hook           distance to an L-shaped polyline on [-1,1]^2
///   ushape_affine  a*x + b*y on a U-shaped mask            (a=1 b=0.25)
///   paraboloid     x^2 + y^2 on [-1,1]^2
///   tipped_sine    sin(x) + x + y on [0, 2*pi]^2
///   random_rows    seeded value per row, constant in x     (seed=0 sorted=0)
///   osc_levels     amp*sin(freq*(x-y)) + amp*freq*(x+y)    (amp=0.25 freq=6)
///   hook_turn      W-shaped radial profile with an interior minimum arc
///                  spanning 280 degrees of a slit annulus
///   leb_not_cone   same W profile, minimum arc running slit to slit
///   annulus_spiral angle function increasing counterclockwise on the
///                  slit annulus
std::vector<std::string> gallery_names();

ScalarField gallery_generate(const std::string& name, int nx, int ny,
                             const GalleryParams& params = {});

}  // namespace mono

#endif
