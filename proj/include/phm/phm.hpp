#pragma once

#include "phm/criteria.hpp"
#include "phm/errors.hpp"
#include "phm/extraction.hpp"
#include "phm/functionals.hpp"
#include "phm/multiindex.hpp"
#include "phm/sampling.hpp"
#include "phm/series.hpp"
#include "phm/univalence.hpp"
