// Copyright 2026 the qvault authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace qvault {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operation attempted on a consumed (measured, transferred or moved-from)
// state handle.
class ConsumedStateError : public Error {
public:
    using Error::Error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

// Amplitude-level inspection requested from a protocol-mode engine.
class OmniscientAccessError : public Error {
public:
    using Error::Error;
};

class AuthenticationError : public Error {
public:
    using Error::Error;
};

class RegistryError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace qvault
