#ifndef LIEMULT_LIEMULT_HPP
#define LIEMULT_LIEMULT_HPP

#include "liemult/catalogue.hpp"
#include "liemult/hall.hpp"
#include "liemult/hopf.hpp"
#include "liemult/lie_algebra.hpp"
#include "liemult/linalg.hpp"
#include "liemult/multiplier.hpp"
#include "liemult/structure.hpp"
#include "liemult/text_format.hpp"
#include "liemult/verify.hpp"

#endif  // LIEMULT_LIEMULT_HPP
