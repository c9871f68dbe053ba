#pragma once

#include "fpplab/delaunay.hpp"
#include "fpplab/rng.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace fpplab {

/// Continuous passage-time distributions with an exponential moment. The
/// `scale` knob multiplies samples as the final operation; scaling by a
/// power of two is therefore exact per draw, which the scaling-equivariance
/// checks rely on.
struct PassageTimeLaw {
    enum class Family { exponential, uniform, shifted_exponential, gamma, pareto };

    Family family = Family::exponential;
    double a = 1.0; // rate | lower | shift | shape | tail index
    double b = 0.0; // unused | upper | rate  | scale | minimum
    double scale = 1.0;

    static PassageTimeLaw exponential(double rate) { return {Family::exponential, rate, 0.0, 1.0}; }
    static PassageTimeLaw uniform(double lo, double hi) { return {Family::uniform, lo, hi, 1.0}; }
    static PassageTimeLaw shifted_exponential(double shift, double rate) {
        return {Family::shifted_exponential, shift, rate, 1.0};
    }
    static PassageTimeLaw gamma_law(double shape, double theta) {
        return {Family::gamma, shape, theta, 1.0};
    }
    static PassageTimeLaw pareto(double alpha, double minimum) {
        return {Family::pareto, alpha, minimum, 1.0};
    }

    void validate() const {
        if (!(scale > 0.0)) throw std::invalid_argument("law scale must be > 0");
        switch (family) {
        case Family::exponential:
            if (!(a > 0.0)) throw std::invalid_argument("exponential rate must be > 0");
            return;
        case Family::uniform:
            if (!(a >= 0.0 && b > a))
                throw std::invalid_argument("uniform law needs 0 <= lower < upper");
            return;
        case Family::shifted_exponential:
            if (!(a >= 0.0) || !(b > 0.0))
                throw std::invalid_argument("shifted exponential needs shift >= 0 and rate > 0");
            return;
        case Family::gamma:
            if (!(a > 0.0 && b > 0.0))
                throw std::invalid_argument("gamma law needs shape > 0 and scale > 0");
            return;
        case Family::pareto:
            throw std::invalid_argument(
                "pareto passage times are rejected: the law has no exponential moment");
        }
        throw std::invalid_argument("unknown passage-time family");
    }

    double mean() const {
        switch (family) {
        case Family::exponential: return scale / a;
        case Family::uniform: return scale * 0.5 * (a + b);
        case Family::shifted_exponential: return scale * (a + 1.0 / b);
        case Family::gamma: return scale * a * b;
        case Family::pareto: break;
        }
        throw std::invalid_argument("mean undefined for this family");
    }

    double sample(RngStream& rng) const {
        switch (family) {
        case Family::exponential: return scale * rng.next_exponential(a);
        case Family::uniform: return scale * (a + (b - a) * rng.next_uniform());
        case Family::shifted_exponential: return scale * (a + rng.next_exponential(b));
        case Family::gamma: return scale * rng.next_gamma(a, b);
        case Family::pareto: break;
        }
        throw std::invalid_argument("cannot sample this family");
    }

    PassageTimeLaw scaled(double c) const {
        PassageTimeLaw out = *this;
        out.scale *= c;
        return out;
    }

    std::string name() const {
        switch (family) {
        case Family::exponential: return "exponential";
        case Family::uniform: return "uniform";
        case Family::shifted_exponential: return "shifted_exponential";
        case Family::gamma: return "gamma";
        case Family::pareto: return "pareto";
        }
        return "?";
    }
};

struct EdgeWeights {
    std::vector<double> weight; // indexed like DelaunayGraph::edges
    PassageTimeLaw law;
    SeedRecord seed;
};

/// I.i.d. weights, one private counter sub-stream per edge id: the weight
/// of an edge is a pure function of (seed record, edge id), independent of
/// the geometry stream and stable under relabel-free graph rebuilds.
inline EdgeWeights assign_weights(const DelaunayGraph& g, const PassageTimeLaw& law,
                                  const SeedRecord& seed) {
    law.validate();
    EdgeWeights w;
    w.law = law;
    w.seed = seed;
    w.weight.resize(g.edges.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        RngStream stream(seed, e);
        w.weight[e] = law.sample(stream);
    }
    return w;
}

} // namespace fpplab
