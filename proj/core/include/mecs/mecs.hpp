#pragma once

#include "mecs/coloring.hpp"
#include "mecs/deadline.hpp"
#include "mecs/errors.hpp"
#include "mecs/fpt.hpp"
#include "mecs/gadgets.hpp"
#include "mecs/graph.hpp"
#include "mecs/ilp.hpp"
#include "mecs/io.hpp"
#include "mecs/kernel.hpp"
#include "mecs/matching.hpp"
#include "mecs/modulator.hpp"
#include "mecs/oracle.hpp"
