#pragma once

// umbrella header

#include "castel/bigint.hpp"
#include "castel/bounds.hpp"
#include "castel/citations.hpp"
#include "castel/classifier.hpp"
#include "castel/combinatorics.hpp"
#include "castel/dispatch.hpp"
#include "castel/envelope.hpp"
#include "castel/errors.hpp"
#include "castel/existence.hpp"
#include "castel/fixtures.hpp"
#include "castel/oracle.hpp"
