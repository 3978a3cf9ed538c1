#ifndef LEIBNIZ_LEIBNIZ_HPP
#define LEIBNIZ_LEIBNIZ_HPP

#include "leibniz/field.hpp"
#include "leibniz/matrix.hpp"
#include "leibniz/linalg.hpp"
#include "leibniz/algebra.hpp"
#include "leibniz/action.hpp"
#include "leibniz/xmod.hpp"
#include "leibniz/groupoid.hpp"
#include "leibniz/covering.hpp"
#include "leibniz/enumerate.hpp"
#include "leibniz/json_io.hpp"
#include "leibniz/fixtures.hpp"

#endif
