// Copyright 2026 The qclone authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCLONE_QCLONE_HPP
#define QCLONE_QCLONE_HPP

#include "qclone/banaszek.hpp"
#include "qclone/boundary.hpp"
#include "qclone/emit.hpp"
#include "qclone/fidelity.hpp"
#include "qclone/machines.hpp"
#include "qclone/oracle.hpp"
#include "qclone/qudit.hpp"
#include "qclone/verify_suite.hpp"

#endif // QCLONE_QCLONE_HPP
