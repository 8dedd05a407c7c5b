#pragma once

#include "modknot/bigint.hpp"
#include "modknot/error.hpp"
#include "modknot/fuzz.hpp"
#include "modknot/kennedy.hpp"
#include "modknot/linking.hpp"
#include "modknot/matrix.hpp"
#include "modknot/psl2.hpp"
#include "modknot/qform.hpp"
#include "modknot/report.hpp"
#include "modknot/tables.hpp"
#include "modknot/words.hpp"
