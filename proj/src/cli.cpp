#include "alphamod/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "alphamod/bump.hpp"
#include "alphamod/covering.hpp"
#include "alphamod/grid.hpp"
#include "alphamod/index_calculus.hpp"
#include "alphamod/io.hpp"
#include "alphamod/lab.hpp"
#include "alphamod/norms.hpp"

namespace alphamod {

using Json = nlohmann::ordered_json;

namespace {

constexpr double kSumTolerance = 1e-8;

// (α1, α2, 1/p1, 1/p2, 1/q): one setting per binding term of A and Ã, plus equal alphas.
constexpr double kRatePreset[][5] = {
    {0.0, 0.5, 1.0, 0.0, 0.0},  {0.0, 0.5, 1.0, 1.0, 0.0},  {0.25, 0.5, 2.0, 0.5, 1.0},
    {0.5, 0.0, 1.0, 1.0, 1.0},  {0.5, 0.0, 0.0, 0.0, 1.0},  {0.5, 0.25, 0.5, 0.0, 0.25},
    {0.5, 0.0, 0.5, 0.5, 1.0},  {0.5, 0.5, 1.0, 0.0, 0.5},
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string short_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

Json index_json(const Eigen::VectorXi& k) {
    Json a = Json::array();
    for (Eigen::Index i = 0; i < k.size(); ++i) a.push_back(k(i));
    return a;
}

Json vector_json(const Eigen::VectorXd& v) {
    Json a = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
    return a;
}

std::string index_text(const Eigen::VectorXi& k) {
    std::string s;
    for (Eigen::Index i = 0; i < k.size(); ++i) s += (i ? " " : "") + std::to_string(k(i));
    return s;
}

Json space_json(const ExactSpace& x) {
    return Json{{"spec", format_space(x)}, {"rp", x.rp.str()}, {"rq", x.rq.str()}, {"s", x.s.str()},
                {"alpha", x.alpha.str()}, {"n", x.n}};
}

Json space_json(const Space& x) {
    return Json{{"rp", x.rp}, {"rq", x.rq}, {"s", x.s}, {"alpha", x.alpha}, {"n", x.n}};
}

template <typename Scalar>
Json breakdown_json(const IndexBreakdown<Scalar>& b) {
    Json terms = Json::array(), exact = Json::array(), binding = Json::array();
    for (const auto& t : b.terms) {
        terms.push_back(ScalarTraits<Scalar>::to_double(t));
        if constexpr (std::is_same_v<Scalar, Rational>) exact.push_back(t.str());
    }
    for (int i : b.argmax) binding.push_back(b.term_label(i));
    Json j{{"branch", to_string(b.branch)}, {"terms", terms}};
    if constexpr (std::is_same_v<Scalar, Rational>) j["terms_exact"] = exact;
    j["value"] = ScalarTraits<Scalar>::to_double(b.value);
    if constexpr (std::is_same_v<Scalar, Rational>) j["value_exact"] = b.value.str();
    j["binding"] = binding;
    return j;
}

Json fit_json(const ExponentFit& f) { return Json{{"slope", f.slope}, {"intercept", f.intercept}, {"r2", f.r2}}; }

Json config_json(const RunConfig& c) {
    Json j;
    j["command"] = to_string(c.command);
    j["source"] = c.source ? space_json(*c.source) : Json();
    j["target"] = c.target ? space_json(*c.target) : Json();
    j["grid"] = Json{{"N", c.N}, {"L", c.L}};
    j["alpha_constants"] = c.constants ? Json::array({c.constants->first, c.constants->second}) : Json();
    j["seed"] = c.seed;
    j["format"] = to_string(c.format);
    j["input"] = c.input;
    j["preset"] = c.preset;
    j["samples"] = c.samples;
    j["j_range"] = Json::array({c.j_min, c.j_max});
    j["truncation"] = c.truncation;
    return j;
}

struct Output {
    Json doc;
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;
    std::optional<std::string> check_failure;
};

CoveringSpec covering_for(const RunConfig& c, double alpha, int n) {
    if (c.constants && alpha < 1.0) return CoveringSpec::with_constants(alpha, n, c.constants->first, c.constants->second);
    return CoveringSpec::defaults(alpha, n);
}

LabOptions lab_options(const RunConfig& c) {
    LabOptions o;
    o.j_min = c.j_min;
    o.j_max = c.j_max;
    o.mc_trials = c.samples;
    o.seed = c.seed;
    o.constants = c.constants;
    return o;
}

Output run_decide(const RunConfig& c) {
    const auto v = embedding_decide(*c.source, *c.target);
    Output o;
    o.doc["embeds"] = v.embeds;
    o.doc["margin"] = v.margin.to_double();
    o.doc["margin_exact"] = v.margin.str();
    o.doc["q_case"] = to_string(v.q_case);
    o.doc["R"] = v.R_value.to_double();
    o.doc["R_exact"] = v.R_value.str();
    o.doc["correction"] = v.correction.to_double();
    o.doc["strict_required"] = v.strict_required;
    o.doc["reason"] = v.reason;
    o.doc["breakdown"] = breakdown_json(v.breakdown);
    o.csv_header = {"embeds", "margin", "q_case", "R", "correction", "strict_required", "reason"};
    o.csv_rows.push_back({v.embeds ? "true" : "false", num(v.margin.to_double()), to_string(v.q_case),
                          num(v.R_value.to_double()), num(v.correction.to_double()),
                          v.strict_required ? "true" : "false", v.reason});
    return o;
}

Output run_index(const RunConfig& c) {
    const auto& X = *c.source;
    const auto& Y = *c.target;
    const auto b = index_R(X.n, X.rp, Y.rp, X.rq, Y.rq, X.alpha, Y.alpha);
    Output o;
    o.doc = breakdown_json(b);
    o.doc["rq_used"] = (b.branch == Branch::LE ? X.rq : Y.rq).str();
    if (Y.rp <= X.rp) {
        Json regions = Json::array();
        const Rational rq = b.branch == Branch::LE ? X.rq : Y.rq;
        for (Region r : region_classify(X.rp, Y.rp, rq, b.branch)) regions.push_back(to_string(r));
        o.doc["regions"] = regions;
    } else {
        o.doc["regions"] = Json();
        o.doc["regions_note"] = "regions are defined for 1/p2 <= 1/p1";
    }
    o.csv_header = {"term", "value", "exact", "binding"};
    for (int i = 0; i < 3; ++i) {
        const bool binds = std::find(b.argmax.begin(), b.argmax.end(), i + 1) != b.argmax.end();
        o.csv_rows.push_back({b.term_label(i + 1), num(b.terms[std::size_t(i)].to_double()),
                              b.terms[std::size_t(i)].str(), binds ? "true" : "false"});
    }
    return o;
}

Output run_covering(const RunConfig& c) {
    const Space X = convert<double>(*c.source);
    const auto spec = covering_for(c, X.alpha, X.n);
    const auto P = build_partition(spec, FrequencyGrid{X.n, c.N, c.L, {0, 0}});
    const auto rep = verify_partition(P);
    if (!c.dump.empty()) {
        std::ofstream f(c.dump, std::ios::binary);
        if (!f) throw Error("cannot write " + c.dump);
        write_partition(f, P);
    }
    Output o;
    o.doc["covering"] = Json{{"alpha", spec.alpha}, {"n", spec.n}, {"dyadic", spec.dyadic()},
                             {"c_small", spec.c_small}, {"c_big", spec.c_big}, {"plateau", spec.plateau}};
    o.doc["check"] = Json{{"sum_deviation", rep.sum_deviation}, {"safe_bins", rep.safe_bins},
                          {"max_overlap", rep.max_overlap}, {"min_denominator", rep.min_denominator},
                          {"support_violation", rep.support_violation},
                          {"plateau_violation", rep.plateau_violation},
                          {"range_violation", rep.range_violation}, {"gradient_ratio", rep.gradient_ratio},
                          {"sum_tolerance", kSumTolerance}};
    Json members = Json::array();
    o.csv_header = {"index", "center", "scale", "inner_radius", "support_radius", "plateau_inner", "plateau_outer"};
    for (const auto& m : P.members) {
        members.push_back(Json{{"index", index_json(m.index)}, {"center", vector_json(m.center)},
                               {"scale", m.scale}, {"inner_radius", m.inner_radius},
                               {"support_radius", m.support_radius}, {"plateau_inner", m.plateau_inner},
                               {"plateau_outer", m.plateau_outer}});
        std::string center;
        for (Eigen::Index i = 0; i < m.center.size(); ++i) center += (i ? " " : "") + num(m.center(i));
        o.csv_rows.push_back({index_text(m.index), center, num(m.scale), num(m.inner_radius),
                              num(m.support_radius), num(m.plateau_inner), num(m.plateau_outer)});
    }
    o.doc["members"] = members;
    if (!(rep.sum_deviation <= kSumTolerance))
        o.check_failure = "partition sum deviates from 1 by " + short_num(rep.sum_deviation);
    return o;
}

GridFunction builtin_function(const std::string& name, int n, int N, double L) {
    const double pi = std::numbers::pi;
    if (name == "gaussian") {
        return GridFunction::sample(n, N, L, [&](const Eigen::VectorXd& x) {
            return std::complex<double>(std::exp(-pi * (x.array() - 0.5 * L).square().sum()));
        });
    }
    if (name == "tone") {
        const std::int64_t b = std::min<std::int64_t>(std::llround(3.0 * L), N / 4);
        return GridFunction::sample(n, N, L, [&](const Eigen::VectorXd& x) {
            return std::polar(1.0, 2.0 * pi * double(b) * x(0) / L);
        });
    }
    if (name == "bump") {
        // Radial plateau spectrum on |ξ| <= R, centered at x = L/2.
        const double R = std::min(4.0, 0.25 * N / L);
        GridFunction spec = GridFunction::zeros(n, N, L);
        spec.domain = Domain::Frequency;
        const auto grid = spec.frequency_grid();
        for (std::int64_t i = 0; i < spec.size(); ++i) {
            const auto bin = grid.bin_of_storage(i);
            double r2 = 0.0;
            std::int64_t phase = 0;
            for (int a = 0; a < n; ++a) {
                r2 += std::pow(grid.frequency_of_bin(bin[std::size_t(a)]), 2);
                phase += bin[std::size_t(a)];
            }
            spec.values(i) = (phase % 2 == 0 ? 1.0 : -1.0) * plateau_bump(std::sqrt(r2), 0.25 * R, R);
        }
        return fourier_transform(spec, Direction::Inverse);
    }
    return load_grid_function(name);
}

Output run_normcalc(const RunConfig& c) {
    const Space X = convert<double>(*c.source);
    GridFunction f = builtin_function(c.input, X.n, c.N, c.L);
    if (f.n != X.n) throw ParameterError("input dimension differs from the space dimension");
    const auto P = build_partition(covering_for(c, X.alpha, X.n), f.frequency_grid());
    const auto r = space_norm(f, X, P);
    Output o;
    o.doc["function"] = Json{{"input", c.input}, {"n", f.n}, {"N", f.N}, {"L", f.L}};
    o.doc["space"] = space_json(X);
    o.doc["value"] = r.value;
    o.doc["lp_norm"] = lp_quasinorm(f, X.rp);
    Json pieces = Json::array();
    o.csv_header = {"index", "value"};
    for (const auto& [k, v] : r.pieces) {
        pieces.push_back(Json{{"index", index_json(k)}, {"value", v}});
        o.csv_rows.push_back({index_text(k), num(v)});
    }
    o.doc["pieces"] = pieces;
    return o;
}

Json rate_json(const RateReport& r) {
    Json j;
    j["source"] = space_json(r.source);
    j["target"] = space_json(r.target);
    j["predicted"] = breakdown_json(r.predicted);
    Json fits{{"uniform", fit_json(r.uniform)}, {"concentrated", fit_json(r.concentrated)},
              {"spread", fit_json(r.spread)}, {"envelope", fit_json(r.envelope)}};
    fits["montecarlo"] = r.montecarlo ? fit_json(*r.montecarlo) : Json();
    j["fits"] = fits;
    j["witness_slope"] = r.witness_slope;
    j["steepest"] = to_string(r.steepest);
    j["deviation"] = std::abs(r.witness_slope - r.predicted.value);
    j["worst_orthogonality_error"] = r.worst_orthogonality_error;
    j["worst_pitch_stability"] = r.worst_pitch_stability ? Json(*r.worst_pitch_stability) : Json();
    j["pass"] = r.pass;
    Json samples = Json::array();
    for (const auto& s : r.samples)
        samples.push_back(Json{{"j", s.j}, {"j_eff", s.j_eff}, {"k", index_json(s.k)}, {"witness", to_string(s.kind)},
                               {"lower_bound", s.lower_bound}, {"relaxed", s.relaxed}});
    j["samples"] = samples;
    return j;
}

Output run_asymptotics(const RunConfig& c) {
    std::vector<std::pair<Space, Space>> cases;
    if (c.preset == "rates") {
        for (const auto& p : kRatePreset) cases.push_back({Space{p[2], p[4], 0.0, p[0], 1}, Space{p[3], p[4], 0.0, p[1], 1}});
    } else {
        cases.push_back({convert<double>(*c.source), convert<double>(*c.target)});
    }
    const auto options = lab_options(c);
    Output o;
    o.csv_header = {"case", "j", "witness", "lower_bound"};
    Json reports = Json::array();
    bool pass = true;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto r = rate_check(cases[i].first, cases[i].second, options);
        pass = pass && r.pass;
        reports.push_back(rate_json(r));
        for (const auto& s : r.samples)
            o.csv_rows.push_back({std::to_string(i), std::to_string(s.j), to_string(s.kind), num(s.lower_bound)});
    }
    o.doc["tolerance"] = options.tolerance;
    o.doc["pass"] = pass;
    o.doc["cases"] = reports;
    return o;
}

Output run_embedding(const RunConfig& c) {
    const auto& X = *c.source;
    const auto& Y = *c.target;
    const auto v = embedding_decide(X, Y);
    Output o;
    o.doc["embeds"] = v.embeds;
    o.doc["margin"] = v.margin.to_double();
    o.doc["reason"] = v.reason;
    o.csv_header = {"series", "x", "value"};
    const double amax = std::max(X.alpha, Y.alpha).to_double();
    if (X.n == 1 && amax < 1.0 && Y.rp <= X.rp) {
        const auto r = embedding_consistency_check(convert<double>(X), convert<double>(Y), c.truncation,
                                                   lab_options(c));
        Json norms = Json::array();
        for (const auto& [K, value] : r.norms) {
            norms.push_back(Json{{"K", K}, {"value", value}});
            o.csv_rows.push_back({"multiplier_norm", std::to_string(K), num(value)});
        }
        for (std::size_t k = 0; k < r.measured.size(); ++k)
            o.csv_rows.push_back({"measured", std::to_string(k), num(r.measured[k])});
        Json measured = Json::array();
        for (double m : r.measured) measured.push_back(m);
        o.doc["consistency"] = Json{{"skipped", r.skipped}, {"growth_slope", r.growth_slope}, {"grows", r.grows},
                                    {"consistent", r.consistent}, {"norms", norms}, {"measured", measured}};
    } else {
        o.doc["consistency"] = Json();
        o.doc["consistency_note"] = "consistency check needs n = 1, alpha1 v alpha2 < 1 and 1/p2 <= 1/p1";
    }
    if (Y.rp > X.rp) {
        const auto d = dilation_necessity_check(X.rp.to_double(), Y.rp.to_double(), X.n);
        Json sweep = Json::array();
        for (std::size_t i = 0; i < d.parameters.size(); ++i) {
            sweep.push_back(Json{{"lambda", d.parameters[i]}, {"ratio", d.ratios[i]}});
            o.csv_rows.push_back({"dilation", num(d.parameters[i]), num(d.ratios[i])});
        }
        o.doc["dilation"] = Json{{"blowup_rate", d.blowup_rate}, {"expected_blowup", d.expected_blowup},
                                 {"pass", d.pass}, {"truncated", d.truncated}, {"sweep", sweep}};
    } else {
        o.doc["dilation"] = Json();
        o.doc["dilation_note"] = "dilation witnesses 1/p2 > 1/p1 only";
    }
    return o;
}

std::string cell_text(const Json& v) {
    if (v.is_null()) return "-";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_float()) return short_num(v.get<double>());
    if (v.is_number()) return v.dump();
    if (v.is_array()) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + cell_text(v[i]);
        return s + "]";
    }
    return v.dump();
}

bool is_plain(const Json& v) {
    if (v.is_object()) return false;
    if (v.is_array()) return std::all_of(v.begin(), v.end(), [](const Json& e) { return !e.is_structured(); });
    return true;
}

bool is_table(const Json& v) {
    return v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_object(); });
}

void table_text(std::ostream& os, const Json& rows, const std::string& indent) {
    std::vector<std::string> cols;
    for (const auto& [k, v] : rows[0].items())
        if (is_plain(v)) cols.push_back(k);
    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> width(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) width[c] = cols[c].size();
    for (const auto& r : rows) {
        std::vector<std::string> line;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            line.push_back(r.contains(cols[c]) ? cell_text(r[cols[c]]) : "-");
            width[c] = std::max(width[c], line.back().size());
        }
        cells.push_back(std::move(line));
    }
    auto emit = [&](const std::vector<std::string>& line) {
        os << indent;
        for (std::size_t c = 0; c < line.size(); ++c) {
            os << line[c];
            if (c + 1 < line.size()) os << std::string(width[c] - line[c].size() + 2, ' ');
        }
        os << '\n';
    };
    emit(cols);
    for (const auto& line : cells) emit(line);
}

void block_text(std::ostream& os, const Json& obj, const std::string& indent) {
    std::size_t w = 0;
    for (const auto& [k, v] : obj.items())
        if (is_plain(v)) w = std::max(w, k.size());
    for (const auto& [k, v] : obj.items()) {
        if (is_plain(v)) {
            os << indent << k << std::string(w - k.size() + 2, ' ') << cell_text(v) << '\n';
        } else if (v.is_object()) {
            os << indent << k << ":\n";
            block_text(os, v, indent + "  ");
        } else if (is_table(v) && std::all_of(v.begin(), v.end(), [](const Json& e) {
                       return std::all_of(e.begin(), e.end(), [](const Json& x) { return is_plain(x); });
                   })) {
            os << indent << k << ":\n";
            table_text(os, v, indent + "  ");
        } else {
            for (std::size_t i = 0; i < v.size(); ++i) {
                os << indent << k << "[" << i << "]:\n";
                if (v[i].is_object())
                    block_text(os, v[i], indent + "  ");
                else
                    os << indent << "  " << cell_text(v[i]) << '\n';
            }
        }
    }
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
}

Output dispatch(const RunConfig& c) {
    switch (c.command) {
        case Command::Decide: return run_decide(c);
        case Command::Index: return run_index(c);
        case Command::Covering: return run_covering(c);
        case Command::Normcalc: return run_normcalc(c);
        case Command::VerifyAsymptotics: return run_asymptotics(c);
        case Command::VerifyEmbedding: return run_embedding(c);
    }
    throw UsageError("unknown command");
}

}  // namespace

const char* to_string(Command c) {
    switch (c) {
        case Command::Decide: return "decide";
        case Command::Index: return "index";
        case Command::Covering: return "covering";
        case Command::Normcalc: return "normcalc";
        case Command::VerifyAsymptotics: return "verify-asymptotics";
        case Command::VerifyEmbedding: return "verify-embedding";
    }
    return "?";
}

const char* to_string(Format f) {
    switch (f) {
        case Format::Json: return "json";
        case Format::Csv: return "csv";
        case Format::Text: return "text";
    }
    return "?";
}

void RunConfig::validate() const {
    const bool two_spaces = command == Command::Decide || command == Command::Index ||
                            command == Command::VerifyEmbedding ||
                            (command == Command::VerifyAsymptotics && preset.empty());
    if (two_spaces && (!source || !target)) throw UsageError(std::string(to_string(command)) + " needs --source and --target");
    if ((command == Command::Covering || command == Command::Normcalc) && !source)
        throw UsageError(std::string(to_string(command)) + " needs --source");
    try {
        if (source) source->validate();
        if (target) target->validate();
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    if (source && target && source->n != target->n) throw UsageError("source and target dimensions differ");
    if (command == Command::Normcalc && input != "gaussian" && input != "bump" && input != "tone" &&
        !std::ifstream(input))
        throw UsageError("cannot open input " + input);
    if (!preset.empty() && preset != "rates") throw UsageError("unknown preset " + preset);
    if (N < 8 || (N & (N - 1)) != 0) throw UsageError("grid N must be a power of two >= 8");
    if (!(L > 0.0) || !std::isfinite(L)) throw UsageError("grid L must be positive");
    if (constants && !(constants->first > 0.0 && constants->second > constants->first))
        throw UsageError("alpha constants need 0 < c < C");
    if (samples < 0) throw UsageError("samples must be >= 0");
    if (j_max - j_min < 3) throw UsageError("j range must span at least 4 octaves");
    if (truncation < 8) throw UsageError("truncation must be >= 8");
}

RunConfig parse_args(const std::vector<std::string>& args) {
    RunConfig c;
    CLI::App app{"Embeddings between alpha-modulation spaces", "alphamod"};
    std::string command, source, target, grid, constants, format = "json", j_range;
    const std::map<std::string, Command> commands{
        {"decide", Command::Decide},       {"index", Command::Index},
        {"covering", Command::Covering},   {"normcalc", Command::Normcalc},
        {"verify-asymptotics", Command::VerifyAsymptotics}, {"verify-embedding", Command::VerifyEmbedding}};
    const std::map<std::string, Format> formats{{"json", Format::Json}, {"csv", Format::Csv}, {"text", Format::Text}};
    app.add_option("command", command, "decide | index | covering | normcalc | verify-asymptotics | verify-embedding")
        ->required();
    app.add_option("--source", source, "source space, e.g. p=2,q=inf,s=1/2,alpha=0.5,n=1");
    app.add_option("--target", target, "target space");
    app.add_option("--grid", grid, "N,L");
    app.add_option("--alpha-constants", constants, "c,C covering constants in scale units");
    app.add_option("--seed", c.seed);
    app.add_option("--out", c.out, "output path (default: standard output)");
    app.add_option("--format", format, "json | csv | text");
    app.add_option("--input", c.input, "normcalc input: gaussian | bump | tone | file (.csv or binary)");
    app.add_option("--preset", c.preset, "verify-asymptotics preset: rates");
    app.add_option("--samples", c.samples, "Monte Carlo trials");
    app.add_option("--j-range", j_range, "jmin,jmax");
    app.add_option("--truncation", c.truncation, "verify-embedding K_max");
    app.add_option("--dump", c.dump, "covering: binary partition dump path");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{app.help()};
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    auto pair_of = [](const std::string& text, const char* what) {
        const auto comma = text.find(',');
        if (comma == std::string::npos) throw UsageError(std::string(what) + " expects two comma-separated values");
        try {
            std::size_t p1 = 0, p2 = 0;
            const std::string a = text.substr(0, comma), b = text.substr(comma + 1);
            const double x = std::stod(a, &p1), y = std::stod(b, &p2);
            if (p1 != a.size() || p2 != b.size()) throw std::invalid_argument(text);
            return std::pair{x, y};
        } catch (const std::logic_error&) {
            throw UsageError(std::string(what) + " expects numbers: " + text);
        }
    };
    const auto cmd = commands.find(command);
    if (cmd == commands.end()) throw UsageError("unknown command " + command);
    c.command = cmd->second;
    const auto fmt = formats.find(format);
    if (fmt == formats.end()) throw UsageError("unknown format " + format);
    c.format = fmt->second;
    try {
        if (!source.empty()) c.source = parse_space(source);
        if (!target.empty()) c.target = parse_space(target);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    if (!grid.empty()) {
        const auto [N, L] = pair_of(grid, "--grid");
        if (N != std::floor(N) || N > double(1 << 24)) throw UsageError("grid N must be an integer");
        c.N = int(N);
        c.L = L;
    }
    if (!constants.empty()) c.constants = pair_of(constants, "--alpha-constants");
    if (!j_range.empty()) {
        const auto [a, b] = pair_of(j_range, "--j-range");
        c.j_min = int(a);
        c.j_max = int(b);
    }
    c.validate();
    return c;
}

Rendered render_report(const RunConfig& c) {
    c.validate();
    Output o = dispatch(c);
    Json doc;
    doc["schema"] = kSchema;
    doc["command"] = to_string(c.command);
    doc["seed"] = c.seed;
    doc["config"] = config_json(c);
    for (auto& [k, v] : o.doc.items()) doc[k] = v;

    std::ostringstream os;
    switch (c.format) {
        case Format::Json: os << doc.dump(2) << '\n'; break;
        case Format::Csv:
            os << "# schema " << kSchema << "\n# seed " << c.seed << "\n# config " << doc["config"].dump() << '\n';
            for (std::size_t i = 0; i < o.csv_header.size(); ++i) os << (i ? "," : "") << o.csv_header[i];
            os << '\n';
            for (const auto& row : o.csv_rows) {
                for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
                os << '\n';
            }
            break;
        case Format::Text: block_text(os, doc, ""); break;
    }
    return {os.str(), o.check_failure};
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const auto r = render_report(config);
        if (config.out.empty()) {
            out << r.report;
        } else {
            std::ofstream f(config.out, std::ios::binary);
            if (!(f << r.report)) throw Error("cannot write " + config.out);
        }
        if (r.check_failure) {
            err << "alphamod: " << *r.check_failure << '\n';
            return 4;
        }
        return 0;
    } catch (const UsageError& e) {
        err << "alphamod: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "alphamod: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "alphamod: internal error: " << e.what() << '\n';
        return 4;
    }
}

int cli_main(int argc, const char* const* argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    RunConfig config;
    try {
        config = parse_args(args);
    } catch (const HelpRequested& h) {
        std::cout << h.text;
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "alphamod: " << e.what() << '\n';
        return 2;
    }
    return run(config, std::cout, std::cerr);
}

}  // namespace alphamod
