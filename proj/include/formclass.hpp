/*
   Copyright 2026 The formclass Authors

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

#ifndef FORMCLASS_FORMCLASS_HPP
#define FORMCLASS_FORMCLASS_HPP

#include "formclass/rational.hpp"
#include "formclass/matrix.hpp"
#include "formclass/subspace.hpp"
#include "formclass/exterior.hpp"
#include "formclass/polynomial.hpp"
#include "formclass/poly_parser.hpp"
#include "formclass/pair.hpp"
#include "formclass/polyfield.hpp"
#include "formclass/precontact.hpp"

#endif  // FORMCLASS_FORMCLASS_HPP
