#pragma once

// Umbrella header for the semicert library (everything except the CLI).

#include "semicert/classify.hpp"
#include "semicert/descriptor.hpp"
#include "semicert/element.hpp"
#include "semicert/error.hpp"
#include "semicert/io.hpp"
#include "semicert/matrix.hpp"
#include "semicert/normalize.hpp"
#include "semicert/random.hpp"
#include "semicert/solver.hpp"
#include "semicert/verify.hpp"
#include "semicert/witness.hpp"
