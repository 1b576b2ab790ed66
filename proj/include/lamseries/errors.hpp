#pragma once

#include <stdexcept>
#include <string>

namespace lamseries {

/// Raised when an operation would divide by a weight gap below the
/// conditioning floor (1e-12 * max(1, lambda_k)).
class GapTooSmall : public std::runtime_error {
public:
    GapTooSmall(int index, double gap, double floor)
        : std::runtime_error("gap at index " + std::to_string(index) + " is " +
                             std::to_string(gap) + ", below conditioning floor " +
                             std::to_string(floor)),
          index_(index) {}
    int index() const noexcept { return index_; }

private:
    int index_;
};

class MissingLambda : public std::invalid_argument {
public:
    explicit MissingLambda(const std::string& space)
        : std::invalid_argument("space " + space + " requires a weight sequence") {}
};

class UnknownWitness : public std::invalid_argument {
public:
    explicit UnknownWitness(const std::string& id)
        : std::invalid_argument("unknown gallery witness: " + id) {}
};

class VacuousPremise : public std::runtime_error {
public:
    explicit VacuousPremise(const std::string& what) : std::runtime_error(what) {}
};

class SubsetDepthTooLarge : public std::invalid_argument {
public:
    explicit SubsetDepthTooLarge(int d)
        : std::invalid_argument("subset depth " + std::to_string(d) +
                                " exceeds the exhaustive-enumeration limit of 14") {}
};

class UnsupportedPair : public std::invalid_argument {
public:
    UnsupportedPair(const std::string& source, const std::string& target)
        : std::invalid_argument("no characterization implemented for (" + source + " : " +
                                target + ")") {}
};

class WeightError : public std::invalid_argument {
public:
    explicit WeightError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace lamseries
