#pragma once

// Umbrella header: exact rational linear algebra, bound quiver algebras,
// module categories, Auslander-Reiten machinery, short-chain decision
// procedures, tilting, and certificates.

#include "arquiver/certify.hpp"
#include "arquiver/examples_gen.hpp"
#include "arquiver/extension.hpp"
#include "arquiver/json_io.hpp"
