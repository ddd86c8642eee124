#pragma once

#include "repdescend/error.hpp"
#include "repdescend/field.hpp"
#include "repdescend/poly.hpp"
#include "repdescend/tower.hpp"
#include "repdescend/matrix.hpp"
#include "repdescend/group.hpp"
#include "repdescend/algebra.hpp"
#include "repdescend/hom.hpp"
#include "repdescend/descent.hpp"
#include "repdescend/group_rep.hpp"
