#pragma once

#include "applications.hpp"
#include "errors.hpp"
#include "group_ring.hpp"
#include "io.hpp"
#include "laurent.hpp"
#include "matrix.hpp"
#include "presentation.hpp"
#include "rational_function.hpp"
#include "representation.hpp"
#include "rings.hpp"
#include "smith.hpp"
#include "twisted.hpp"
#include "word.hpp"
