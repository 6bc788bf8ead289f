/*
   Copyright 2026 the etaflat authors

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

#pragma once

#include <stdexcept>
#include <string>

namespace etaflat {

/// Base class of everything the engine throws on purpose.
struct EtaflatError : std::runtime_error {
    explicit EtaflatError(const std::string& msg) : std::runtime_error(msg) {}
};

#define ETAFLAT_DEFINE_ERROR(Name)                                    \
    struct Name : EtaflatError {                                      \
        explicit Name(const std::string& msg) : EtaflatError(msg) {}  \
    }

// exact arithmetic
ETAFLAT_DEFINE_ERROR(ConductorTooLarge);
ETAFLAT_DEFINE_ERROR(DivisionByZero);
ETAFLAT_DEFINE_ERROR(IncompatibleConductors);
ETAFLAT_DEFINE_ERROR(CotangentPole);

// matrix algebra
ETAFLAT_DEFINE_ERROR(ShapeError);
ETAFLAT_DEFINE_ERROR(NotFiniteOrder);
ETAFLAT_DEFINE_ERROR(NotUnimodular);
ETAFLAT_DEFINE_ERROR(NonIsolatedFixedPoints);
ETAFLAT_DEFINE_ERROR(DegenerateInput);
ETAFLAT_DEFINE_ERROR(NotRootsOfUnity);

// group actions
ETAFLAT_DEFINE_ERROR(DimensionError);
ETAFLAT_DEFINE_ERROR(OrderMismatch);
ETAFLAT_DEFINE_ERROR(NotFree);
ETAFLAT_DEFINE_ERROR(UnsupportedAction);

// eta engine
ETAFLAT_DEFINE_ERROR(IncompleteCharacter);
ETAFLAT_DEFINE_ERROR(CertificationError);

// catalog and I/O
ETAFLAT_DEFINE_ERROR(NotFound);
ETAFLAT_DEFINE_ERROR(ParseError);
ETAFLAT_DEFINE_ERROR(SchemaError);
ETAFLAT_DEFINE_ERROR(InternalError);

#undef ETAFLAT_DEFINE_ERROR

}  // namespace etaflat
