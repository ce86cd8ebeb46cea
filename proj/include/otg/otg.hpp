#pragma once

#include "otg/chirotope.hpp"
#include "otg/cli.hpp"
#include "otg/construction.hpp"
#include "otg/error.hpp"
#include "otg/exact_geom.hpp"
#include "otg/io.hpp"
#include "otg/splitmix.hpp"
#include "otg/svg.hpp"
#include "otg/verify.hpp"
