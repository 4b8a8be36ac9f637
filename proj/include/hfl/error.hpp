// Copyright (c) 2026 The hfl Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#pragma once

#include <stdexcept>
#include <string>

namespace hfl {

enum class ErrorKind {
    NotAPair,
    EmptyTuple,
    Syntax,
    NotSigma0,
    UnboundVariable,
    UnboundedWithoutUniverse,
    StageTooLarge,
    BudgetExceeded,
    InvalidModel,
    NodeOutsideCone,
    InvalidArgument,
};

const char *to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string &what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), m_kind(kind) {}
    ErrorKind kind() const { return m_kind; }

private:
    ErrorKind m_kind;
};

class SyntaxError : public Error {
public:
    SyntaxError(const std::string &msg, std::size_t pos)
        : Error(ErrorKind::Syntax, msg + " at offset " + std::to_string(pos)), m_pos(pos) {}
    std::size_t position() const { return m_pos; }

private:
    std::size_t m_pos;
};

} // namespace hfl
