#pragma once

#include "tlinks/errors.hpp"
#include "tlinks/braid.hpp"
#include "tlinks/garside.hpp"
#include "tlinks/laurent.hpp"
#include "tlinks/invariants.hpp"
#include "tlinks/tlink.hpp"
#include "tlinks/satellite.hpp"
#include "tlinks/classify.hpp"
