#pragma once

#include "gasprint/config.hpp"
#include "gasprint/eip1559.hpp"
#include "gasprint/emission_factors.hpp"
#include "gasprint/error.hpp"
#include "gasprint/gas_price_series.hpp"
#include "gasprint/network_model.hpp"
#include "gasprint/q_digamma.hpp"
#include "gasprint/report.hpp"
#include "gasprint/scenario.hpp"
#include "gasprint/series_csv.hpp"
