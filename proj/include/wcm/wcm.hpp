#pragma once

#include "wcm/chordal.hpp"
#include "wcm/cm_chordal.hpp"
#include "wcm/covers.hpp"
#include "wcm/errors.hpp"
#include "wcm/facets.hpp"
#include "wcm/graph.hpp"
#include "wcm/harness.hpp"
#include "wcm/ideal.hpp"
#include "wcm/linalg.hpp"
#include "wcm/random.hpp"
#include "wcm/simplicial.hpp"
