#pragma once

#include "lsys/bench.hpp"
#include "lsys/error.hpp"
#include "lsys/expand.hpp"
#include "lsys/geometry.hpp"
#include "lsys/interpretation.hpp"
#include "lsys/io.hpp"
#include "lsys/lsystem.hpp"
#include "lsys/morphism.hpp"
#include "lsys/presets.hpp"
#include "lsys/symbol.hpp"
#include "lsys/verify.hpp"
