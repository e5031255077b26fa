#pragma once

#include <stdexcept>
#include <string>

namespace heat1d {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid solver configuration (CFL violation, bad sizes).
class ConfigError : public Error {
public:
    using Error::Error;
};

class PartitionError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

/// The peer endpoint of a channel is gone.
class Disconnected : public Error {
public:
    Disconnected() : Error("channel peer disconnected") {}
};

/// Ghost-exchange protocol violation detected in validate mode.
class ProtocolError : public Error {
public:
    using Error::Error;
};

/// Total heat drifted beyond round-off during a validated run.
class ConservationError : public Error {
public:
    using Error::Error;
};

class DegenerateFit : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace heat1d
