#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lamseries/lambda_core.hpp"
#include "lamseries/sequence.hpp"
#include "lamseries/verdict.hpp"
#include "lamseries/weights.hpp"

namespace lamseries {

/// Identifier of a classical sequence space or its lambda-domain.
struct SpaceTag {
    enum class Kind {
        c0,
        c,
        linf,
        lp,
        cs0,
        cs,
        bs,
        c0_lambda,
        c_lambda,
        linf_lambda,
        cs0_lambda,
        cs_lambda,
        bs_lambda,
    };

    Kind kind = Kind::cs;
    double p = 0.0; // exponent for lp, 1 <= p < infinity

    static SpaceTag parse(const std::string& name);
    std::string name() const;
    bool is_lambda_domain() const;
    /// Base space of a lambda domain (cs_lambda -> cs, ...).
    SpaceTag base() const;
    /// Lambda domain of a base space (cs -> cs_lambda, ...).
    SpaceTag lambda_domain() const;
};

/// Membership verdict for x in the given space at finite depth. Lambda
/// domains classify the transformed sequence in the base space, which is the
/// matrix-domain semantics taken literally. Requires depth >= 16.
Verdict classify(const LazySequence& x, SpaceTag space, const LambdaWeights* weights,
                 int depth = 4096, double tol = 1e-8);

struct GalleryClaim {
    SpaceTag space;
    bool member; // member => verdict must be holds; otherwise must not be holds
};

/// A strict-inclusion witness with its claimed memberships and, where one
/// exists, the closed form of its transform.
struct GalleryWitness {
    std::string id;
    LazySequence sequence;
    std::vector<GalleryClaim> claims;
    std::string closed_form;
    std::function<double(int)> transform_closed_form; // null when none
    std::function<double(int)> transform_lower_bound; // null when none
};

/// Witness ids: cs-not-cs0, bs-not-cs, c0lam-not-cslam, linflam-not-bslam.
/// Throws UnknownWitness otherwise.
GalleryWitness gallery(const std::string& id, const LambdaWeights& weights);
const std::vector<std::string>& gallery_ids();

struct InclusionReport {
    Verdict s_in_target;      // verdict of record: S(x) in the target space
    Verdict x_in_target;      // is x itself in the target space
    double identity_max_dev;  // max deviation of sum S = sum x - sum (transform)
};

/// Per-sequence evidence for the conditional inclusions: requires x to be in
/// the lambda domain of `target` (throws VacuousPremise otherwise), then
/// classifies S(x) and x in the target space and checks the partial-sum
/// identity relating them.
InclusionReport inclusion_criterion_check(const LazySequence& x, const LambdaWeights& weights,
                                          SpaceTag target, int depth = 4096,
                                          double tol = 1e-8);

} // namespace lamseries
