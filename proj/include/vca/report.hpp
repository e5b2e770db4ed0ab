#ifndef VCA_REPORT_HPP
#define VCA_REPORT_HPP

#include <json.hpp>
#include <string>

#include "vca/algebra.hpp"
#include "vca/drawing.hpp"
#include "vca/hypergraph.hpp"
#include "vca/lattice.hpp"

namespace vca {

using json = nlohmann::ordered_json;

json covers_to_json(const CoverSet& cs);
json drawing_to_json(const BipartiteGraph& g, const StandardDrawing& d);
json gdim_to_json(const BipartiteGraph& g, const GdimResult& r);
json hilbert_to_json(const HilbertProfile& p);
json lattice_to_json(const CoverLattice& l);
json report_to_json(const BipartiteGraph& g, const AlgebraReport& r);
json hypergraph_report_to_json(const WeightedHypergraph& h, const DegreeBoundsReport& r);

std::string report_to_text(const BipartiteGraph& g, const AlgebraReport& r);
std::string hilbert_to_text(const HilbertProfile& p);

}  // namespace vca

#endif
