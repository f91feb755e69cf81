#pragma once

#include "fza/value.hpp"
#include "fza/fuzzy_set.hpp"
#include "fza/dist_set.hpp"
#include "fza/machine.hpp"
#include "fza/semantics.hpp"
#include "fza/transforms.hpp"
#include "fza/oracle.hpp"
#include "fza/io.hpp"
