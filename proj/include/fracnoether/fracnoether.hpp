#pragma once

#include "fracnoether/circle_function.hpp"
#include "fracnoether/errors.hpp"
#include "fracnoether/frac_div_circle.hpp"
#include "fracnoether/frac_line.hpp"
#include "fracnoether/hopf.hpp"
#include "fracnoether/io.hpp"
#include "fracnoether/kernels.hpp"
#include "fracnoether/line_function.hpp"
#include "fracnoether/noether.hpp"
#include "fracnoether/nonlinearity.hpp"
#include "fracnoether/pohozaev.hpp"
#include "fracnoether/random.hpp"
#include "fracnoether/spectral_circle.hpp"
#include "fracnoether/suites.hpp"
