#pragma once

#include "lame/error.hpp"
#include "lame/oracle.hpp"
#include "lame/point.hpp"
#include "lame/polygon.hpp"
#include "lame/projector.hpp"
#include "lame/regions.hpp"
#include "lame/superellipse.hpp"
