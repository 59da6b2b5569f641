#pragma once

#include "cartcodes/codes.hpp"
#include "cartcodes/error.hpp"
#include "cartcodes/gf.hpp"
#include "cartcodes/grid.hpp"
#include "cartcodes/hilbert.hpp"
#include "cartcodes/linalg.hpp"
#include "cartcodes/polynomial.hpp"
