#pragma once

// Umbrella header.

#include "reprange/patterns.hpp"
#include "reprange/permutation.hpp"
#include "reprange/reduced_words.hpp"
#include "reprange/theorems.hpp"
#include "reprange/verify.hpp"
