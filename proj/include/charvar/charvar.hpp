#pragma once

#include "charvar/classify.hpp"
#include "charvar/cohomology.hpp"
#include "charvar/errors.hpp"
#include "charvar/fixtures.hpp"
#include "charvar/format.hpp"
#include "charvar/group.hpp"
#include "charvar/lie_algebra.hpp"
#include "charvar/numlin.hpp"
#include "charvar/poincare.hpp"
#include "charvar/random_rep.hpp"
#include "charvar/rep_io.hpp"
#include "charvar/representation.hpp"
#include "charvar/structure.hpp"
#include "charvar/tracecoords.hpp"
