#pragma once

#include "trellis/core.hpp"
#include "trellis/relation.hpp"
#include "trellis/algebra.hpp"
#include "trellis/element_classes.hpp"
#include "trellis/interior.hpp"
#include "trellis/binary_op.hpp"
#include "trellis/constructions.hpp"
#include "trellis/enumeration.hpp"
#include "trellis/fixtures.hpp"
#include "trellis/document.hpp"
#include "trellis/dot.hpp"
