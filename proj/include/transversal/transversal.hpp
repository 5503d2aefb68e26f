#ifndef TRANSVERSAL_TRANSVERSAL_HPP
#define TRANSVERSAL_TRANSVERSAL_HPP

#include "transversal/cover.hpp"
#include "transversal/generators.hpp"
#include "transversal/io.hpp"
#include "transversal/lll.hpp"
#include "transversal/nibble.hpp"
#include "transversal/oracle.hpp"
#include "transversal/phase1.hpp"
#include "transversal/pipeline.hpp"
#include "transversal/rational.hpp"
#include "transversal/reductions.hpp"
#include "transversal/rng.hpp"

#endif
