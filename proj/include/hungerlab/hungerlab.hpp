#pragma once

#include "hungerlab/baselines.hpp"
#include "hungerlab/chain.hpp"
#include "hungerlab/chain_io.hpp"
#include "hungerlab/csv.hpp"
#include "hungerlab/engine.hpp"
#include "hungerlab/estimators.hpp"
#include "hungerlab/lazy.hpp"
#include "hungerlab/recurrence.hpp"
