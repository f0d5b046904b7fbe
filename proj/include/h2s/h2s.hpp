#ifndef H2S_H2S_HPP
#define H2S_H2S_HPP

#include "h2s/core.hpp"
#include "h2s/hadamard.hpp"
#include "h2s/io.hpp"
#include "h2s/maxcut.hpp"
#include "h2s/random.hpp"
#include "h2s/reduction.hpp"
#include "h2s/report.hpp"
#include "h2s/selftest.hpp"
#include "h2s/solvers.hpp"

#endif  // H2S_H2S_HPP
