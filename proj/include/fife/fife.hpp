#pragma once
// Umbrella header for the whole library.

#include "automaton.hpp"  // IWYU pragma: export
#include "code.hpp"       // IWYU pragma: export
#include "exponent.hpp"   // IWYU pragma: export
#include "freeness.hpp"   // IWYU pragma: export
#include "kernel.hpp"     // IWYU pragma: export
#include "report.hpp"     // IWYU pragma: export
#include "search.hpp"     // IWYU pragma: export
#include "verifier.hpp"   // IWYU pragma: export
#include "word.hpp"       // IWYU pragma: export
