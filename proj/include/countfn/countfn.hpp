#pragma once

#include <countfn/brooks.hpp>
#include <countfn/canon_group.hpp>
#include <countfn/canon_monoid.hpp>
#include <countfn/certificate.hpp>
#include <countfn/counting_function.hpp>
#include <countfn/error.hpp>
#include <countfn/oracle.hpp>
#include <countfn/rational.hpp>
#include <countfn/text.hpp>
#include <countfn/words.hpp>
