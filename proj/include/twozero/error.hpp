/*
   Copyright 2026 The twozero Authors

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

#ifndef TWOZERO_ERROR_HPP
#define TWOZERO_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace twozero {

enum class ErrorKind {
    // invalid input
    NotOddPrime,
    DegreeTooLarge,
    STooSmall,
    NotADivisor,
    NotInSubfield,
    ZeroArgument,
    DivisionByZero,
    BothZero,
    UnsupportedCase,
    // refusal
    BudgetExceeded,
    // internal: a mathematical claim the library relies on did not hold
    InternalInconsistency,
    DistinctnessViolated,
    NonRationalSum,
    NonIntegralWeight,
    InexactDivision,
    Overflow,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    /// True for errors caused by the caller's parameters rather than by the library.
    bool is_invalid_input() const noexcept {
        switch (kind_) {
            case ErrorKind::NotOddPrime:
            case ErrorKind::DegreeTooLarge:
            case ErrorKind::STooSmall:
            case ErrorKind::NotADivisor:
            case ErrorKind::NotInSubfield:
            case ErrorKind::ZeroArgument:
            case ErrorKind::DivisionByZero:
            case ErrorKind::BothZero:
                return true;
            default:
                return false;
        }
    }

   private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace twozero

#endif
