#pragma once

// Umbrella header: complete homogeneous and Schur polynomials of repeated
// variables, partial-fraction coefficient families, confluent Vandermonde
// machinery, and the cross-validation sweep.

#include "homrep/bigint.hpp"
#include "homrep/coeffs.hpp"
#include "homrep/combinat.hpp"
#include "homrep/crosscheck.hpp"
#include "homrep/errors.hpp"
#include "homrep/expansions.hpp"
#include "homrep/homcore.hpp"
#include "homrep/matrix.hpp"
#include "homrep/points.hpp"
#include "homrep/polynomial.hpp"
#include "homrep/rational.hpp"
#include "homrep/scalar.hpp"
#include "homrep/series.hpp"
#include "homrep/vandermonde.hpp"
