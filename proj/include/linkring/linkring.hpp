#pragma once

#include "linkring/errors.hpp"
#include "linkring/scalar.hpp"
#include "linkring/matrix.hpp"
#include "linkring/free_group.hpp"
#include "linkring/laurent.hpp"
#include "linkring/group_ring.hpp"
#include "linkring/magnus_fox.hpp"
#include "linkring/seifert.hpp"
#include "linkring/blanchfield.hpp"
#include "linkring/invariants.hpp"
