#pragma once

#include "group.hpp"
#include "subgroups.hpp"
#include "perfect_code.hpp"
#include "gf2.hpp"
#include "constructions.hpp"
#include "extraspecial.hpp"
#include "io.hpp"
#include "harness.hpp"
