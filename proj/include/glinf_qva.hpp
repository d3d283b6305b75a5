#pragma once

#include <glinf_qva/exppoly.hpp>
#include <glinf_qva/glinf.hpp>
#include <glinf_qva/glinf_e.hpp>
#include <glinf_qva/linear_combination.hpp>
#include <glinf_qva/parse.hpp>
#include <glinf_qva/pbw.hpp>
#include <glinf_qva/rational.hpp>
#include <glinf_qva/series.hpp>
#include <glinf_qva/suites.hpp>
#include <glinf_qva/zoo.hpp>
