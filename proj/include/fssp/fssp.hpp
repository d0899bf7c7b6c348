#pragma once

#include "grid.hpp"
#include "barriers.hpp"
#include "shapes.hpp"
#include "timebounds.hpp"
#include "line_fssp.hpp"
#include "sh1.hpp"
#include "transcript.hpp"
#include "message_plan.hpp"
#include "mft2.hpp"
