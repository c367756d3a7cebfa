#pragma once

#include "losq/battery.hpp"
#include "losq/bfile.hpp"
#include "losq/families.hpp"
#include "losq/integer.hpp"
#include "losq/oracle.hpp"
#include "losq/poly.hpp"
#include "losq/render.hpp"
#include "losq/residue.hpp"
#include "losq/series.hpp"
#include "losq/triangle.hpp"
#include "losq/triangles.hpp"
