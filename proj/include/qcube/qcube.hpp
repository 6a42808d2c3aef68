#pragma once

#include "qcube/codes.hpp"
#include "qcube/counting.hpp"
#include "qcube/dashing.hpp"
#include "qcube/error.hpp"
#include "qcube/isomorphism.hpp"
#include "qcube/quotient_graph.hpp"
#include "qcube/spectrum.hpp"
#include "qcube/thermo.hpp"
