#pragma once

#include "splitgen/error.hpp"
#include "splitgen/field.hpp"
#include "splitgen/poly.hpp"
#include "splitgen/linalg.hpp"
#include "splitgen/factor.hpp"
#include "splitgen/algebra.hpp"
#include "splitgen/presentation.hpp"
#include "splitgen/jordan.hpp"
#include "splitgen/blocks.hpp"
#include "splitgen/models.hpp"
#include "splitgen/superpotential.hpp"
#include "splitgen/gepner.hpp"
#include "splitgen/twisted.hpp"
#include "splitgen/homalg.hpp"
