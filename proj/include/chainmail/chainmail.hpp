#pragma once

#include "chainmail/absolute.hpp"
#include "chainmail/borger.hpp"
#include "chainmail/canonical.hpp"
#include "chainmail/connectivity.hpp"
#include "chainmail/element_set.hpp"
#include "chainmail/enumeration.hpp"
#include "chainmail/errors.hpp"
#include "chainmail/exterior.hpp"
#include "chainmail/fixtures.hpp"
#include "chainmail/generators.hpp"
#include "chainmail/io.hpp"
#include "chainmail/lattice.hpp"
#include "chainmail/limits.hpp"
#include "chainmail/parallel.hpp"
#include "chainmail/poset.hpp"
#include "chainmail/taxonomy.hpp"
