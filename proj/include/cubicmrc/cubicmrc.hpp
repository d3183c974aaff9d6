/*
   Copyright 2026 The cubicmrc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CUBICMRC_CUBICMRC_HPP
#define CUBICMRC_CUBICMRC_HPP

#include "polyring.hpp"
#include "linalg.hpp"
#include "int_poly.hpp"
#include "groebner.hpp"
#include "ideal_ops.hpp"
#include "resolution.hpp"
#include "mrc.hpp"
#include "liaison.hpp"
#include "cubic_lab.hpp"

#endif  // CUBICMRC_CUBICMRC_HPP
