#pragma once

#include "dominance/partition.hpp"
#include "dominance/text.hpp"
#include "dominance/enumerate.hpp"
#include "dominance/cover.hpp"
#include "dominance/theorem.hpp"
#include "dominance/report.hpp"
