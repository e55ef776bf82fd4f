#pragma once

// Umbrella header.

#include "cremona/subsets.hpp"
#include "cremona/incidence.hpp"
#include "cremona/isomorphism.hpp"
#include "cremona/fields.hpp"
#include "cremona/linalg.hpp"
#include "cremona/cremona_richmond.hpp"
#include "cremona/realization.hpp"
#include "cremona/reports.hpp"
