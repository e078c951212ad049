#ifndef SPFKIT_ERROR_HPP
#define SPFKIT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace spfkit
{

enum class ErrorKind
{
    precondition,        ///< an operation's input contract is violated
    domain,              ///< parameter outside the admissible range of a formula
    pole_evaluation,     ///< evaluation exactly at a pole
    pole_on_interval,    ///< non-finite sample while scanning an interval
    root_finder,         ///< polynomial root finder did not converge
    size_limit,          ///< requested object is too large to build
    degenerate,          ///< construction produced a numerically zero object
    no_regular_solution, ///< regularization search exhausted
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), m_kind(kind)
    {
    }

    ErrorKind kind() const noexcept { return m_kind; }

private:
    ErrorKind m_kind;
};

inline void require(bool condition, ErrorKind kind, const std::string& what)
{
    if (!condition)
        throw Error(kind, what);
}

} // namespace spfkit

#endif
