#ifndef HILZETA_HPP
#define HILZETA_HPP

#include "hilzeta/errors.hpp"
#include "hilzeta/rational.hpp"
#include "hilzeta/field.hpp"
#include "hilzeta/surface_config.hpp"
#include "hilzeta/special_functions.hpp"
#include "hilzeta/quadrature.hpp"
#include "hilzeta/elliptic.hpp"
#include "hilzeta/parallel.hpp"
#include "hilzeta/geodesics.hpp"
#include "hilzeta/zeta.hpp"
#include "hilzeta/spectral.hpp"
#include "hilzeta/io.hpp"
#include "hilzeta/verify.hpp"

#endif  // HILZETA_HPP
