#pragma once

#include <initializer_list>
#include <map>
#include <string>

namespace lamseries {

/// Three-valued conclusion about an asymptotic property from finite-depth
/// evidence. `holds` for a limit property always means the finite-depth
/// criterion passed, never a proof.
enum class Conclusion { holds, fails, inconclusive };

std::string to_string(Conclusion c);

struct Verdict {
    Conclusion conclusion = Conclusion::inconclusive;
    int depth = 0;
    double tolerance = 0.0;
    std::map<std::string, double> evidence;
    std::string note;
};

/// Three-valued AND: any fails wins, else any inconclusive, else holds.
Conclusion conclusion_and(Conclusion a, Conclusion b);

inline Conclusion conclusion_and(std::initializer_list<Conclusion> cs) {
    Conclusion out = Conclusion::holds;
    for (Conclusion c : cs) out = conclusion_and(out, c);
    return out;
}

} // namespace lamseries
