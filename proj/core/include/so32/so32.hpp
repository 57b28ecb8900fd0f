#ifndef SO32_SO32_HPP
#define SO32_SO32_HPP

#include "so32/alp.hpp"
#include "so32/differential.hpp"
#include "so32/errors.hpp"
#include "so32/generators.hpp"
#include "so32/index.hpp"
#include "so32/quadrature.hpp"
#include "so32/sphere.hpp"
#include "so32/structure.hpp"
#include "so32/transforms.hpp"
#include "so32/verify.hpp"
#include "so32/version.hpp"

#endif  // SO32_SO32_HPP
