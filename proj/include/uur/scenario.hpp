#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "uur/bounds.hpp"

namespace uur {

// Inclusive theta grid: count points from start to stop, endpoints included.
struct ThetaGrid {
    double start;
    double stop;
    std::size_t count;
};

// Whole-circle sweep at half-degree steps; fine enough that every claimed
// ordering and crossing between curves is visible in the data.
inline constexpr ThetaGrid default_grid{0.0, 6.283185307179586476925287, 721};

enum class BoundKind {
    Chain,        // I<k>
    ChainMax,     // Imax<k>, permutation-strengthened
    LB2,          // two-operator covariance bound
    LB3,          // three-operator closed-form bound
    DetG,         // Gram determinant over {I, U_1, ..., U_m}
    Product3,     // prod3_k<k>, sqrt of the three-pair product
    Product3Max,  // prod3hat_k<k>, strengthened factors
    Product4,     // prod4_k<k>, fixed pairing ((A,B),(C,D))
};

struct BoundSpec {
    BoundKind kind;
    std::size_t k;  // chain/product index; 0 for LB2/LB3/DetG

    // Wire identifier, e.g. "I3", "Imax2", "LB2", "detG", "prod3hat_k4".
    std::string id() const;

    // Inverse of id(); throws ScenarioError on anything outside the
    // vocabulary (chain and product indices accept k = 2..9).
    static BoundSpec parse(const std::string& text);
};

struct Scenario {
    std::string name;
    std::string description;
    std::function<State(double)> state_family;  // theta -> state
    std::vector<UnitaryOperator> operators;     // 2, 3, or 4 of them
    ThetaGrid grid = default_grid;
    std::vector<BoundSpec> bounds;
};

struct CurvePoint {
    double theta;
    double variance_product;
    // Bound values keyed by wire id, in the scenario's requested order.
    std::vector<std::pair<std::string, double>> bounds;
};

// Builtin catalog covering the library's demonstration families. Names are
// stable interface: example1-d2..d5, example1-remark, example2..example6.
const std::vector<Scenario>& scenario_catalog();
const Scenario& find_scenario(const std::string& name);  // ScenarioError if unknown

// "start:stop:count" with decimal fields; ScenarioError on malformed input.
ThetaGrid parse_grid(const std::string& text);

// Scenario description loaded from a JSON file; see README for the schema.
Scenario load_scenario_file(const std::string& path);

// Checks the scenario invariants (operator count, grid sanity, bound/operator
// compatibility, k versus effective dimension), naming the offending field in
// the ScenarioError message.
void validate_scenario(const Scenario& s);

// One CurvePoint per grid point, endpoints inclusive, deterministic. The seed
// feeds heuristic permutation searches only; scenarios that never leave the
// exhaustive regime ignore it.
std::vector<CurvePoint> run_scenario(const Scenario& s,
                                     std::uint64_t seed = default_search_seed);

// theta,variance_product,<bound ids> header plus one row per point, 15
// significant digits.
void write_csv(const std::vector<CurvePoint>& points, std::ostream& os);

// Array of objects with the same keys as the CSV columns.
void write_json(const std::vector<CurvePoint>& points, std::ostream& os);

}  // namespace uur
