#include "uur/scenario.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "uur/tolerances.hpp"

namespace uur {

std::string BoundSpec::id() const {
    switch (kind) {
        case BoundKind::Chain:
            return "I" + std::to_string(k);
        case BoundKind::ChainMax:
            return "Imax" + std::to_string(k);
        case BoundKind::LB2:
            return "LB2";
        case BoundKind::LB3:
            return "LB3";
        case BoundKind::DetG:
            return "detG";
        case BoundKind::Product3:
            return "prod3_k" + std::to_string(k);
        case BoundKind::Product3Max:
            return "prod3hat_k" + std::to_string(k);
        case BoundKind::Product4:
            return "prod4_k" + std::to_string(k);
    }
    throw Error("unreachable: bad bound kind");
}

namespace {

// Matches prefix + single digit 2..9, the full indexed vocabulary.
std::optional<std::size_t> indexed_id(const std::string& text, const std::string& prefix) {
    if (text.size() != prefix.size() + 1 || text.compare(0, prefix.size(), prefix) != 0) {
        return std::nullopt;
    }
    const char digit = text.back();
    if (digit < '2' || digit > '9') return std::nullopt;
    return static_cast<std::size_t>(digit - '0');
}

}  // namespace

BoundSpec BoundSpec::parse(const std::string& text) {
    if (text == "LB2") return {BoundKind::LB2, 0};
    if (text == "LB3") return {BoundKind::LB3, 0};
    if (text == "detG") return {BoundKind::DetG, 0};
    if (auto k = indexed_id(text, "Imax")) return {BoundKind::ChainMax, *k};
    if (auto k = indexed_id(text, "I")) return {BoundKind::Chain, *k};
    if (auto k = indexed_id(text, "prod3hat_k")) return {BoundKind::Product3Max, *k};
    if (auto k = indexed_id(text, "prod3_k")) return {BoundKind::Product3, *k};
    if (auto k = indexed_id(text, "prod4_k")) return {BoundKind::Product4, *k};
    throw ScenarioError("bounds: unknown bound id '" + text + "'");
}

namespace {

constexpr double pi = std::numbers::pi;

std::vector<BoundSpec> chain_bounds(std::size_t k_max) {
    std::vector<BoundSpec> out;
    for (std::size_t k = 2; k <= k_max; ++k) out.push_back({BoundKind::Chain, k});
    out.push_back({BoundKind::LB2, 0});
    return out;
}

std::vector<BoundSpec> product3_bounds(std::size_t k_max, bool strengthened) {
    std::vector<BoundSpec> out;
    for (std::size_t k = 2; k <= k_max; ++k) out.push_back({BoundKind::Product3, k});
    if (strengthened) {
        for (std::size_t k = 2; k <= k_max; ++k) out.push_back({BoundKind::Product3Max, k});
    }
    out.push_back({BoundKind::LB3, 0});
    return out;
}

State cos_sin_qudit(std::size_t d, double theta) {
    std::vector<cplx> amps(d, cplx(0.0, 0.0));
    amps[0] = std::cos(theta);
    amps[d - 1] = -std::sin(theta);
    return State(PureState(std::move(amps)));
}

Scenario make_example1(std::size_t d) {
    Scenario s;
    s.name = "example1-d" + std::to_string(d);
    s.description = "dim-" + std::to_string(d) +
                    " cos/sin superposition against the clock/shift pair; the chain "
                    "collapses onto the covariance bound";
    s.state_family = [d](double theta) { return cos_sin_qudit(d, theta); };
    s.operators = {clock(d), shift(d)};
    s.bounds = chain_bounds(d);
    return s;
}

Scenario make_example1_remark() {
    Scenario s;
    s.name = "example1-remark";
    s.description =
        "qutrit clock/shift case with permutation-strengthened bounds; the "
        "strengthened I2 recovers the full variance product";
    s.state_family = [](double theta) { return cos_sin_qudit(3, theta); };
    s.operators = {clock(3), shift(3)};
    s.bounds = {{BoundKind::Chain, 2},
                {BoundKind::Chain, 3},
                {BoundKind::ChainMax, 2},
                {BoundKind::ChainMax, 3},
                {BoundKind::LB2, 0}};
    return s;
}

State bloch_circle_qubit(double theta) {
    return State(bloch_qubit({1.0 / 3.0, (2.0 / 3.0) * std::cos(theta),
                              (2.0 / 3.0) * std::sin(theta)}));
}

Scenario make_example2() {
    Scenario s;
    s.name = "example2";
    s.description =
        "mixed qubit on a Bloch-vector circle against two Pauli rotations; "
        "full four-member chain vs the covariance bound";
    s.state_family = bloch_circle_qubit;
    s.operators = {pauli_exp(Axis::Y, pi / 8.0), pauli_exp(Axis::Z, pi / 8.0)};
    s.bounds = chain_bounds(4);
    return s;
}

Scenario make_example3() {
    Scenario s;
    s.name = "example3";
    s.description =
        "dim-4 pure state with three unitaries; three-operator product bounds "
        "(plain and strengthened) vs the closed-form bound";
    s.state_family = [](double theta) {
        const double h = theta / 2.0;
        const double root3 = std::sqrt(3.0);
        return State(PureState({0.5 * std::cos(h), (root3 / 2.0) * std::sin(h),
                                0.5 * std::sin(h), (root3 / 2.0) * std::cos(h)}));
    };
    s.operators = {clock(4), shift(4),
                   UnitaryOperator(ComplexMatrix::from_rows({{0, 1, 0, 0},
                                                             {1, 0, 0, 0},
                                                             {0, 0, 1, 0},
                                                             {0, 0, 0, -1}}))};
    s.bounds = product3_bounds(4, true);
    return s;
}

Scenario make_example4() {
    Scenario s;
    s.name = "example4";
    s.description =
        "mixed qubit (same family as example2) with three Pauli rotations; "
        "product bounds over the purified dimension N = 4";
    s.state_family = bloch_circle_qubit;
    s.operators = {pauli_exp(Axis::Y, pi / 8.0), pauli_exp(Axis::Z, pi / 8.0),
                   pauli_exp(Axis::X, pi / 8.0)};
    s.bounds = product3_bounds(4, true);
    return s;
}

Scenario make_example5() {
    Scenario s;
    s.name = "example5";
    s.description =
        "rank-2 mixed qutrit against three coordinate rotations; N = 9 product "
        "bounds (k = 2..6 stay above the closed-form bound)";
    s.state_family = [](double theta) {
        const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
        return State(gellmann_qutrit({inv_sqrt3 * std::cos(theta), 0.0, 0.0, 0.0, 0.0,
                                      inv_sqrt3 * std::sin(theta), 0.0, 0.0}));
    };
    s.operators = {rotation3(Axis::Z, pi / 4.0), rotation3(Axis::Y, -pi / 4.0),
                   rotation3(Axis::X, pi / 3.0)};
    // 9!^2 permutations put the strengthened variants out of exhaustive reach,
    // so this scenario emits the plain product chain only.
    s.bounds = product3_bounds(9, false);
    return s;
}

Scenario make_example6() {
    Scenario s;
    s.name = "example6";
    s.description =
        "dim-5 pure state with two diagonal phase operators and two shifts; "
        "the paired product bound saturates while the Gram determinant dips to "
        "zero only at theta = n*pi";
    s.state_family = [](double theta) {
        const double root3 = std::sqrt(3.0);
        return State(PureState({std::cos(theta), 0.5 * std::sin(theta), 0.0, 0.0,
                                (root3 / 2.0) * std::sin(theta)}));
    };
    ComplexMatrix a(5, 5);
    for (int j = 0; j < 5; ++j) {
        a(static_cast<std::size_t>(j), static_cast<std::size_t>(j)) =
            std::polar(1.0, 2.0 * pi * static_cast<double>(j - 2) / 5.0);
    }
    const UnitaryOperator op_a(a);
    const UnitaryOperator op_b(a.conjugate());
    const UnitaryOperator op_c = shift(5);
    const UnitaryOperator op_d(op_c.matrix() * cplx(0.0, 1.0));
    s.operators = {op_a, op_b, op_c, op_d};
    s.bounds = {{BoundKind::Product4, 2},
                {BoundKind::Product4, 3},
                {BoundKind::Product4, 4},
                {BoundKind::Product4, 5},
                {BoundKind::DetG, 0}};
    return s;
}

}  // namespace

const std::vector<Scenario>& scenario_catalog() {
    static const std::vector<Scenario> catalog = [] {
        std::vector<Scenario> list;
        for (std::size_t d = 2; d <= 5; ++d) list.push_back(make_example1(d));
        list.push_back(make_example1_remark());
        list.push_back(make_example2());
        list.push_back(make_example3());
        list.push_back(make_example4());
        list.push_back(make_example5());
        list.push_back(make_example6());
        return list;
    }();
    return catalog;
}

const Scenario& find_scenario(const std::string& name) {
    for (const Scenario& s : scenario_catalog()) {
        if (s.name == name) return s;
    }
    throw ScenarioError("scenario: unknown name '" + name +
                        "'; run the list command for the catalog");
}

ThetaGrid parse_grid(const std::string& text) {
    const auto fail = [&text]() -> ThetaGrid {
        throw ScenarioError("grid: expected start:stop:count, got '" + text + "'");
    };
    const std::size_t first = text.find(':');
    const std::size_t second = text.find(':', first == std::string::npos ? 0 : first + 1);
    if (first == std::string::npos || second == std::string::npos ||
        text.find(':', second + 1) != std::string::npos) {
        return fail();
    }
    ThetaGrid g{};
    try {
        std::size_t used = 0;
        const std::string a = text.substr(0, first);
        const std::string b = text.substr(first + 1, second - first - 1);
        const std::string c = text.substr(second + 1);
        g.start = std::stod(a, &used);
        if (used != a.size()) return fail();
        g.stop = std::stod(b, &used);
        if (used != b.size()) return fail();
        const long long count = std::stoll(c, &used);
        if (used != c.size() || count < 0) return fail();
        g.count = static_cast<std::size_t>(count);
    } catch (const std::exception&) {
        return fail();
    }
    return g;
}

void validate_scenario(const Scenario& s) {
    if (s.name.empty()) throw ScenarioError("name: must not be empty");
    if (!s.state_family) throw ScenarioError("state_family: must be set");

    const std::size_t op_count = s.operators.size();
    if (op_count < 2 || op_count > 4) {
        throw ScenarioError("operators: expected 2 to 4 operators, got " +
                            std::to_string(op_count));
    }
    for (std::size_t i = 1; i < op_count; ++i) {
        if (s.operators[i].dim() != s.operators[0].dim()) {
            throw ScenarioError("operators[" + std::to_string(i) + "]: dimension " +
                                std::to_string(s.operators[i].dim()) +
                                " differs from operators[0] dimension " +
                                std::to_string(s.operators[0].dim()));
        }
    }

    if (!std::isfinite(s.grid.start) || !std::isfinite(s.grid.stop)) {
        throw ScenarioError("grid: start and stop must be finite");
    }
    if (s.grid.count < 2) {
        throw ScenarioError("grid.count: must be at least 2, got " +
                            std::to_string(s.grid.count));
    }
    if (!(s.grid.stop > s.grid.start)) {
        throw ScenarioError("grid.stop: must exceed grid.start");
    }

    if (s.bounds.empty()) throw ScenarioError("bounds: must request at least one bound");

    const State probe = s.state_family(s.grid.start);
    if (probe.dim() != s.operators[0].dim()) {
        throw ScenarioError("state_family: state dimension " + std::to_string(probe.dim()) +
                            " does not match operator dimension " +
                            std::to_string(s.operators[0].dim()));
    }
    const std::size_t n_eff = probe.effective_dim();

    for (std::size_t i = 0; i < s.bounds.size(); ++i) {
        const BoundSpec& b = s.bounds[i];
        const std::string where = "bounds[" + std::to_string(i) + "] (" + b.id() + "): ";
        const auto need_ops = [&](std::size_t want) {
            if (op_count != want) {
                throw ScenarioError(where + "needs exactly " + std::to_string(want) +
                                    " operators, scenario has " + std::to_string(op_count));
            }
        };
        switch (b.kind) {
            case BoundKind::Chain:
            case BoundKind::ChainMax:
            case BoundKind::LB2:
                need_ops(2);
                break;
            case BoundKind::LB3:
            case BoundKind::Product3:
            case BoundKind::Product3Max:
                need_ops(3);
                break;
            case BoundKind::Product4:
                need_ops(4);
                break;
            case BoundKind::DetG:
                break;  // any supported operator count
        }
        if (b.k > 0 && b.k > n_eff) {
            throw ScenarioError(where + "k exceeds the effective dimension N = " +
                                std::to_string(n_eff));
        }
    }
}

namespace {

struct PairCache {
    const Scenario& scenario;
    const State& state;
    std::array<std::optional<AmplitudePair>, 4> slots;  // (0,1) (0,2) (1,2) (2,3)

    const AmplitudePair& get(std::size_t slot, std::size_t i, std::size_t j) {
        if (!slots[slot]) {
            slots[slot] = amplitude_pair(scenario.operators[i], scenario.operators[j], state);
        }
        return *slots[slot];
    }

    const AmplitudePair& p01() { return get(0, 0, 1); }
    const AmplitudePair& p02() { return get(1, 0, 2); }
    const AmplitudePair& p12() { return get(2, 1, 2); }
    const AmplitudePair& p23() { return get(3, 2, 3); }
};

double bound_value(const BoundSpec& b, const Scenario& s, const State& state,
                   PairCache& pairs, std::uint64_t seed) {
    switch (b.kind) {
        case BoundKind::Chain:
            return i_k(pairs.p01(), b.k);
        case BoundKind::ChainMax:
            return max_permuted_i_k(pairs.p01(), b.k, SearchStrategy::Auto, seed).value;
        case BoundKind::LB2:
            return lb2(s.operators[0], s.operators[1], state);
        case BoundKind::LB3:
            return lb3(s.operators[0], s.operators[1], s.operators[2], state);
        case BoundKind::DetG:
            return gram(s.operators, state).determinant;
        case BoundKind::Product3:
            return std::sqrt(i_k(pairs.p01(), b.k) * i_k(pairs.p02(), b.k) *
                             i_k(pairs.p12(), b.k));
        case BoundKind::Product3Max: {
            const double iab =
                max_permuted_i_k(pairs.p01(), b.k, SearchStrategy::Auto, seed).value;
            const double iac =
                max_permuted_i_k(pairs.p02(), b.k, SearchStrategy::Auto, seed).value;
            const double ibc =
                max_permuted_i_k(pairs.p12(), b.k, SearchStrategy::Auto, seed).value;
            return std::sqrt(iab * iac * ibc);
        }
        case BoundKind::Product4:
            return i_k(pairs.p01(), b.k) * i_k(pairs.p23(), b.k);
    }
    throw Error("unreachable: bad bound kind");
}

}  // namespace

std::vector<CurvePoint> run_scenario(const Scenario& s, std::uint64_t seed) {
    validate_scenario(s);
    const ThetaGrid& g = s.grid;
    std::vector<CurvePoint> points;
    points.reserve(g.count);
    for (std::size_t idx = 0; idx < g.count; ++idx) {
        const double theta = g.start + (g.stop - g.start) * static_cast<double>(idx) /
                                           static_cast<double>(g.count - 1);
        const State state = s.state_family(theta);
        double vprod = 1.0;
        for (const UnitaryOperator& u : s.operators) vprod *= variance(u, state);

        PairCache pairs{s, state, {}};
        CurvePoint pt{theta, vprod, {}};
        pt.bounds.reserve(s.bounds.size());
        for (const BoundSpec& b : s.bounds) {
            const double value = bound_value(b, s, state, pairs, seed);
            // Every emitted value is a lower bound on the variance product;
            // anything above it signals a defect, not a data point.
            if (value > vprod + tol::curve_soundness) {
                char buf[64];
                std::snprintf(buf, sizeof buf, "%.17g", theta);
                throw Error("bound " + b.id() + " exceeds the variance product at theta = " +
                            buf + " in scenario " + s.name);
            }
            pt.bounds.emplace_back(b.id(), value);
        }
        points.push_back(std::move(pt));
    }
    return points;
}

namespace {

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

}  // namespace

void write_csv(const std::vector<CurvePoint>& points, std::ostream& os) {
    if (points.empty()) throw Error("refusing to write an empty curve");
    os << "theta,variance_product";
    for (const auto& [id, value] : points.front().bounds) os << ',' << id;
    os << '\n';
    for (const CurvePoint& pt : points) {
        os << format_value(pt.theta) << ',' << format_value(pt.variance_product);
        for (const auto& [id, value] : pt.bounds) os << ',' << format_value(value);
        os << '\n';
    }
}

void write_json(const std::vector<CurvePoint>& points, std::ostream& os) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const CurvePoint& pt : points) {
        nlohmann::ordered_json obj;
        obj["theta"] = pt.theta;
        obj["variance_product"] = pt.variance_product;
        for (const auto& [id, value] : pt.bounds) obj[id] = value;
        arr.push_back(std::move(obj));
    }
    os << arr.dump(2) << '\n';
}

namespace {

using nlohmann::json;

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
    throw ScenarioError(field + ": " + what);
}

const json& require_field(const json& obj, const std::string& field,
                          const std::string& where) {
    const auto it = obj.find(field);
    if (it == obj.end()) field_error(where.empty() ? field : where + "." + field, "missing");
    return *it;
}

double as_number(const json& v, const std::string& field) {
    if (!v.is_number()) field_error(field, "must be a number");
    return v.get<double>();
}

cplx as_complex(const json& v, const std::string& field) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
        field_error(field, "must be a [re, im] pair");
    }
    return {v[0].get<double>(), v[1].get<double>()};
}

std::vector<cplx> as_complex_vector(const json& v, const std::string& field) {
    if (!v.is_array() || v.empty()) field_error(field, "must be a non-empty array");
    std::vector<cplx> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        out.push_back(as_complex(v[i], field + "[" + std::to_string(i) + "]"));
    }
    return out;
}

ComplexMatrix as_matrix(const json& v, const std::string& field) {
    if (!v.is_array() || v.empty()) field_error(field, "must be a non-empty array of rows");
    std::vector<std::vector<cplx>> rows;
    rows.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        rows.push_back(as_complex_vector(v[i], field + "[" + std::to_string(i) + "]"));
    }
    try {
        return ComplexMatrix::from_rows(rows);
    } catch (const Error& e) {
        field_error(field, e.what());
    }
}

Axis as_axis(const json& v, const std::string& field) {
    if (v.is_string()) {
        const std::string text = v.get<std::string>();
        if (text == "x" || text == "X") return Axis::X;
        if (text == "y" || text == "Y") return Axis::Y;
        if (text == "z" || text == "Z") return Axis::Z;
    }
    field_error(field, "must be one of \"x\", \"y\", \"z\"");
}

std::function<State(double)> parse_state(const json& v) {
    if (!v.is_object()) field_error("state", "must be an object");
    const std::string kind = require_field(v, "kind", "state").get<std::string>();
    if (kind == "pure") {
        try {
            PureState ps(as_complex_vector(require_field(v, "amplitudes", "state"),
                                           "state.amplitudes"));
            return [st = State(std::move(ps))](double) { return st; };
        } catch (const ScenarioError&) {
            throw;
        } catch (const Error& e) {
            field_error("state.amplitudes", e.what());
        }
    }
    if (kind == "density") {
        try {
            DensityMatrix dm(as_matrix(require_field(v, "matrix", "state"), "state.matrix"));
            return [st = State(std::move(dm))](double) { return st; };
        } catch (const ScenarioError&) {
            throw;
        } catch (const Error& e) {
            field_error("state.matrix", e.what());
        }
    }
    if (kind == "bloch_qubit") {
        const json& r = require_field(v, "r", "state");
        if (!r.is_array() || r.size() != 3) field_error("state.r", "must be a 3-vector");
        std::array<double, 3> vec{};
        for (std::size_t i = 0; i < 3; ++i) {
            vec[i] = as_number(r[i], "state.r[" + std::to_string(i) + "]");
        }
        try {
            DensityMatrix dm = bloch_qubit(vec);
            return [st = State(std::move(dm))](double) { return st; };
        } catch (const Error& e) {
            field_error("state.r", e.what());
        }
    }
    if (kind == "gellmann_qutrit") {
        const json& n = require_field(v, "n", "state");
        if (!n.is_array() || n.size() != 8) field_error("state.n", "must be an 8-vector");
        std::array<double, 8> vec{};
        for (std::size_t i = 0; i < 8; ++i) {
            vec[i] = as_number(n[i], "state.n[" + std::to_string(i) + "]");
        }
        try {
            DensityMatrix dm = gellmann_qutrit(vec);
            return [st = State(std::move(dm))](double) { return st; };
        } catch (const Error& e) {
            field_error("state.n", e.what());
        }
    }
    if (kind == "family") {
        const std::string name = require_field(v, "name", "state").get<std::string>();
        try {
            return find_scenario(name).state_family;
        } catch (const Error& e) {
            field_error("state.name", e.what());
        }
    }
    field_error("state.kind", "unknown kind '" + kind + "'");
}

UnitaryOperator parse_operator(const json& v, const std::string& field) {
    if (!v.is_object()) field_error(field, "must be an object");
    const std::string kind = require_field(v, "kind", field).get<std::string>();
    try {
        if (kind == "clock" || kind == "shift") {
            const double dim = as_number(require_field(v, "dim", field), field + ".dim");
            if (dim < 2 || dim != std::floor(dim)) {
                field_error(field + ".dim", "must be an integer >= 2");
            }
            return kind == "clock" ? clock(static_cast<std::size_t>(dim))
                                   : shift(static_cast<std::size_t>(dim));
        }
        if (kind == "pauli_exp" || kind == "rotation3") {
            const Axis axis = as_axis(require_field(v, "axis", field), field + ".axis");
            const double angle =
                as_number(require_field(v, "angle", field), field + ".angle");
            return kind == "pauli_exp" ? pauli_exp(axis, angle) : rotation3(axis, angle);
        }
        if (kind == "matrix") {
            return UnitaryOperator(
                as_matrix(require_field(v, "entries", field), field + ".entries"));
        }
    } catch (const ScenarioError&) {
        throw;
    } catch (const Error& e) {
        field_error(field, e.what());
    }
    field_error(field + ".kind", "unknown kind '" + kind + "'");
}

}  // namespace

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioError("file: cannot open '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw ScenarioError("file: '" + path + "' is not valid JSON (" + e.what() + ")");
    }
    if (!doc.is_object()) throw ScenarioError("file: top level must be an object");

    Scenario s;
    s.name = require_field(doc, "name", "").get<std::string>();
    if (doc.contains("description")) s.description = doc["description"].get<std::string>();
    s.state_family = parse_state(require_field(doc, "state", ""));

    const json& ops = require_field(doc, "operators", "");
    if (!ops.is_array()) field_error("operators", "must be an array");
    for (std::size_t i = 0; i < ops.size(); ++i) {
        s.operators.push_back(parse_operator(ops[i], "operators[" + std::to_string(i) + "]"));
    }

    if (doc.contains("grid")) {
        const json& g = doc["grid"];
        if (!g.is_object()) field_error("grid", "must be an object");
        s.grid.start = as_number(require_field(g, "start", "grid"), "grid.start");
        s.grid.stop = as_number(require_field(g, "stop", "grid"), "grid.stop");
        const double count = as_number(require_field(g, "count", "grid"), "grid.count");
        if (count < 0 || count != std::floor(count)) {
            field_error("grid.count", "must be a nonnegative integer");
        }
        s.grid.count = static_cast<std::size_t>(count);
    }

    const json& bounds = require_field(doc, "bounds", "");
    if (!bounds.is_array()) field_error("bounds", "must be an array");
    for (const auto& b : bounds) {
        if (!b.is_string()) field_error("bounds", "entries must be strings");
        s.bounds.push_back(BoundSpec::parse(b.get<std::string>()));
    }

    validate_scenario(s);
    return s;
}

}  // namespace uur
