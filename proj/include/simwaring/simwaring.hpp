#pragma once

#include "simwaring/apolar_scheme.hpp"
#include "simwaring/bigint.hpp"
#include "simwaring/collection.hpp"
#include "simwaring/collection_io.hpp"
#include "simwaring/decomposition.hpp"
#include "simwaring/decomposition_json.hpp"
#include "simwaring/errors.hpp"
#include "simwaring/monomial.hpp"
#include "simwaring/monomial_ideal.hpp"
#include "simwaring/root_chain.hpp"
#include "simwaring/simrank.hpp"
#include "simwaring/symbolic_root.hpp"
#include "simwaring/verdict.hpp"
