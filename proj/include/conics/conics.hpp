#pragma once

#include "conics/errors.hpp"
#include "conics/factor.hpp"
#include "conics/field.hpp"
#include "conics/implicitize.hpp"
#include "conics/linalg.hpp"
#include "conics/mubasis.hpp"
#include "conics/oracle.hpp"
#include "conics/parameterize.hpp"
#include "conics/parse.hpp"
#include "conics/pencil.hpp"
#include "conics/polycore.hpp"
#include "conics/quadmap.hpp"
#include "conics/rees.hpp"
#include "conics/singular.hpp"
#include "conics/univariate.hpp"
