#pragma once

#include "ponsyz/binform.hpp"
#include "ponsyz/error.hpp"
#include "ponsyz/exact/matrix.hpp"
#include "ponsyz/exact/scalar.hpp"
#include "ponsyz/io.hpp"
#include "ponsyz/laplace.hpp"
#include "ponsyz/mpoly.hpp"
#include "ponsyz/poncelet.hpp"
#include "ponsyz/random.hpp"
#include "ponsyz/syzygy.hpp"
