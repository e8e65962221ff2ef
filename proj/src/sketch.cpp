#include "polarmin/sketch.hpp"

namespace polarmin {

namespace {

Stream stream_for(ProbeSpace space) {
    switch (space) {
        case ProbeSpace::node: return Stream::probe_node;
        case ProbeSpace::edge: return Stream::probe_edge;
        default: return Stream::probe_diag;
    }
}

}  // namespace

SketchProbe make_probe(ProbeSpace space, int dim, int index, int p,
                       std::uint64_t seed, std::uint64_t round) {
    SketchProbe probe;
    probe.space = space;
    probe.index = index;
    probe.p = p;
    probe.row.resize(dim);
    const double scale = 1.0 / std::sqrt(static_cast<double>(p));
    std::mt19937_64 rng = substream_rng(seed, stream_for(space), round,
                                        static_cast<std::uint64_t>(index));
    for (int i = 0; i < dim; ++i)
        probe.row[i] = (rng() >> 63) ? scale : -scale;
    return probe;
}

}  // namespace polarmin
