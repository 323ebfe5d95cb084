#pragma once

#include "msis/bitcore.hpp"
#include "msis/bitstream.hpp"
#include "msis/codec.hpp"
#include "msis/errors.hpp"
#include "msis/image.hpp"
#include "msis/keygen.hpp"
#include "msis/metrics.hpp"
#include "msis/shareio.hpp"
