#pragma once

#include <cstddef>
#include <vector>

#include <epsmult/exponent.hpp>

namespace epsmult::detail
{

// Largest dimension of a face of cone(base_rays, rays) that contains none of
// the base rays. Rays are integer vectors of one common length.
std::size_t max_face_dimension_avoiding(const std::vector<std::vector<Exponent>> &base_rays,
                                        const std::vector<std::vector<Exponent>> &rays);

} // namespace epsmult::detail
