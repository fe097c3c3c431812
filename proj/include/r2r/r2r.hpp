#pragma once

#include "r2r/combinatorics.hpp"
#include "r2r/exact_linalg.hpp"
#include "r2r/frobenius.hpp"
#include "r2r/injective.hpp"
#include "r2r/lifting.hpp"
#include "r2r/permutation.hpp"
#include "r2r/polynomial.hpp"
#include "r2r/scalar.hpp"
#include "r2r/serialize.hpp"
#include "r2r/specht.hpp"
#include "r2r/spectrum.hpp"
#include "r2r/word.hpp"
#include "r2r/wordspace.hpp"
