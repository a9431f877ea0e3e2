#pragma once

#include "certificates.hpp"
#include "field.hpp"
#include "flags.hpp"
#include "linalg.hpp"
#include "matrix.hpp"
#include "shapes.hpp"
#include "similarity.hpp"
#include "subspace.hpp"
#include "varieties.hpp"
