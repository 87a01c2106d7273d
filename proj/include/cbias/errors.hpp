#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cbias {

using Vertex = int;

/// Base of every error thrown by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Malformed arguments: non-edges, invalid forests, bad file contents.
class InputError : public Error
{
public:
    using Error::Error;
};

/// A degree hypothesis of a construction does not hold for the given input.
class HypothesisError : public Error
{
public:
    explicit HypothesisError(const std::string & what, std::optional<Vertex> vertex = std::nullopt)
        : Error(what), vertex_(vertex)
    {
    }

    /// The vertex witnessing the failure, when there is one.
    std::optional<Vertex> vertex() const { return vertex_; }

private:
    std::optional<Vertex> vertex_;
};

/// A search step found nothing to work with. Under the theorem's hypothesis
/// this cannot happen, so it points at a violated precondition.
class InfeasibleError : public Error
{
public:
    using Error::Error;
};

/// Something that a proof guarantees did not hold. Always a bug.
class InternalError : public Error
{
public:
    using Error::Error;
};

/// Neither of the two assembled cycles was unbalanced enough.
class TheoremViolation : public Error
{
public:
    using Error::Error;
};

/// Enumeration refused because the graph exceeds the size guard.
class SizeError : public Error
{
public:
    using Error::Error;
};

/// Permissive-mode solve that did not reach the requested bias. Carries the
/// most unbalanced cycle seen and its largest colour count.
class BestEffortFailure : public Error
{
public:
    BestEffortFailure(const std::string & what, std::vector<Vertex> best_cycle, int best_count)
        : Error(what), best_cycle_(std::move(best_cycle)), best_count_(best_count)
    {
    }

    const std::vector<Vertex> & best_cycle() const { return best_cycle_; }
    int best_count() const { return best_count_; }

private:
    std::vector<Vertex> best_cycle_;
    int best_count_;
};

} // namespace cbias
