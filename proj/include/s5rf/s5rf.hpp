#pragma once

#include "s5rf/checkpoint.hpp"
#include "s5rf/common.hpp"
#include "s5rf/config.hpp"
#include "s5rf/data.hpp"
#include "s5rf/digits.hpp"
#include "s5rf/discretize.hpp"
#include "s5rf/hippo.hpp"
#include "s5rf/layer.hpp"
#include "s5rf/metrics.hpp"
#include "s5rf/model.hpp"
#include "s5rf/scan.hpp"
#include "s5rf/spike.hpp"
#include "s5rf/train.hpp"
