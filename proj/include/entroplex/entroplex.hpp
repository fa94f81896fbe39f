#pragma once

#include "entroplex/bounds.hpp"
#include "entroplex/entropy.hpp"
#include "entroplex/experiments.hpp"
#include "entroplex/golden_section.hpp"
#include "entroplex/io.hpp"
#include "entroplex/linalg.hpp"
#include "entroplex/matrix.hpp"
#include "entroplex/measurement.hpp"
#include "entroplex/random.hpp"
#include "entroplex/states.hpp"
#include "entroplex/suites.hpp"
