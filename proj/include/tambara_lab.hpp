#pragma once

#include "tambara/burnside.hpp"
#include "tambara/config.hpp"
#include "tambara/dress.hpp"
#include "tambara/formal_sum.hpp"
#include "tambara/groups.hpp"
#include "tambara/gsets.hpp"
#include "tambara/hopf.hpp"
#include "tambara/json_io.hpp"
#include "tambara/mackey.hpp"
#include "tambara/polynomial.hpp"
#include "tambara/report.hpp"
#include "tambara/tambara.hpp"
#include "tambara/tambarization.hpp"
#include "tambara/tensor.hpp"
#include "tambara/zlin.hpp"
