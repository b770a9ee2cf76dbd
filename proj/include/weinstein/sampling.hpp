#pragma once

#include <cstdint>
#include <random>

#include "weinstein/grid.hpp"

namespace weinstein {

/// exp(-|x|^2 / (2 width^2)) sampled on a grid. With width 1 this is the
/// fixed point of the transform.
Field gaussian_field(const Grid& grid, double width = 1.0);

/// Sum of a few randomly centred, randomly scaled Gaussian bumps with random
/// complex amplitudes. Even and smooth in the radial variable, negligible at
/// the edges of a box of half-width >= 8, and spectrally band-limited well
/// inside the default frequency box.
Field random_enveloped_field(const Grid& grid, std::mt19937_64& rng, int bumps = 4);

}  // namespace weinstein
