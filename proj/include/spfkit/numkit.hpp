#ifndef SPFKIT_NUMKIT_HPP
#define SPFKIT_NUMKIT_HPP

#include "spfkit/error.hpp"
#include "spfkit/linalg.hpp"
#include "spfkit/parallel.hpp"
#include "spfkit/polynomial.hpp"
#include "spfkit/power_series.hpp"
#include "spfkit/roots.hpp"
#include "spfkit/sup_norm.hpp"

#endif
