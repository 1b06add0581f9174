#pragma once

// Umbrella header; users generally include only this file.

#include "windlab/bigint.hpp"
#include "windlab/coloring.hpp"
#include "windlab/intmat.hpp"
#include "windlab/invariant.hpp"
#include "windlab/laurent.hpp"
#include "windlab/numeric.hpp"
#include "windlab/prng.hpp"
#include "windlab/quotient.hpp"
#include "windlab/render.hpp"
#include "windlab/subgroup.hpp"
#include "windlab/symmetry.hpp"
#include "windlab/winding.hpp"
#include "windlab/word.hpp"
