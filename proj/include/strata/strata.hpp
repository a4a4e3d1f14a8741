#pragma once

#include "strata/binary_form.hpp"
#include "strata/blowup.hpp"
#include "strata/census.hpp"
#include "strata/error.hpp"
#include "strata/field.hpp"
#include "strata/morphism.hpp"
#include "strata/projective.hpp"
#include "strata/serialize.hpp"
#include "strata/text.hpp"
