#pragma once

#include "nctree/errors.hpp"
#include "nctree/geom_kernel.hpp"
#include "nctree/instance.hpp"
#include "nctree/tree_builder.hpp"
#include "nctree/uncrosser.hpp"
#include "nctree/verify_oracle.hpp"
