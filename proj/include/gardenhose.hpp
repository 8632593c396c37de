#pragma once

#include "gardenhose/bounds.hpp"
#include "gardenhose/error.hpp"
#include "gardenhose/evaluate.hpp"
#include "gardenhose/families.hpp"
#include "gardenhose/io.hpp"
#include "gardenhose/message.hpp"
#include "gardenhose/model.hpp"
#include "gardenhose/randomized.hpp"
#include "gardenhose/sample_machines.hpp"
#include "gardenhose/sat.hpp"
#include "gardenhose/search.hpp"
#include "gardenhose/truth_table.hpp"
#include "gardenhose/turing.hpp"
