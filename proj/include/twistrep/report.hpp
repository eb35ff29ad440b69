#pragma once

// verify / fusion / smatrix / monodromy: verdicts plus tables, rendered as
// deterministic JSON and as text.

#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "twistrep/branchcut.hpp"
#include "twistrep/spec_io.hpp"

namespace twistrep {

inline constexpr const char* kReportSchema = "twistrep-report/1";

enum ExitCode : int { kExitOk = 0, kExitValidation = 1, kExitParse = 2, kExitInconsistent = 3 };

struct Verdict {
    std::string name;
    bool passed = true;
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    std::optional<std::string> witness;
    std::string detail;

    static Verdict from(const std::string& prefix, const AxiomCheck& c) {
        return {prefix + c.axiom, c.passed(), c.checked, c.failures, c.witness, {}};
    }
    static Verdict single(std::string name, bool ok, std::string detail = {}) {
        return {std::move(name), ok, 1, ok ? 0u : 1u, std::nullopt, std::move(detail)};
    }
};

struct RunOptions {
    std::uint64_t seed = 0;
    double tolerance = 1e-9;
    std::int64_t max_product_dim = 4096;
};

struct Report {
    using json = nlohmann::ordered_json;

    std::string command;
    std::string spec_name;
    std::string spec_digest;
    std::uint64_t seed = 0;
    std::vector<Verdict> verdicts;
    json tables = json::object();
    std::vector<std::string> text;  // table renderings for humans
    std::optional<std::string> error;
    int exit_code = kExitOk;

    void add(const std::string& prefix, const CoherenceReport& r) {
        for (const auto& c : r.checks) verdicts.push_back(Verdict::from(prefix, c));
    }

    [[nodiscard]] bool passed() const {
        for (const auto& v : verdicts)
            if (!v.passed) return false;
        return !error.has_value();
    }

    [[nodiscard]] const Verdict* find(const std::string& name) const {
        for (const auto& v : verdicts)
            if (v.name == name) return &v;
        return nullptr;
    }

    /// Sets exit 0/1 from the verdicts unless an error already fixed it.
    void finish() {
        if (exit_code == kExitOk && !passed()) exit_code = kExitValidation;
    }

    [[nodiscard]] json to_json() const {
        json j;
        j["schema_version"] = kReportSchema;
        j["command"] = command;
        j["spec"] = spec_name;
        j["spec_digest"] = spec_digest;
        j["seed"] = seed;
        j["exit_code"] = exit_code;
        if (error) j["error"] = *error;
        json vs = json::array();
        for (const auto& v : verdicts) {
            json e;
            e["name"] = v.name;
            e["passed"] = v.passed;
            e["checked"] = v.checked;
            e["failures"] = v.failures;
            if (v.witness) e["witness"] = *v.witness;
            if (!v.detail.empty()) e["detail"] = v.detail;
            vs.push_back(std::move(e));
        }
        j["verdicts"] = std::move(vs);
        j["tables"] = tables;
        return j;
    }

    [[nodiscard]] std::string machine() const { return to_json().dump(2) + "\n"; }

    [[nodiscard]] std::string human() const {
        std::ostringstream os;
        os << command << " " << (spec_name.empty() ? "-" : spec_name) << " (seed " << seed << ")\n";
        for (const auto& v : verdicts) {
            os << (v.passed ? "PASS " : "FAIL ") << v.name << " (" << v.checked << " checked";
            if (!v.passed) os << ", " << v.failures << " failing";
            if (v.witness) os << ", witness " << *v.witness;
            os << ")";
            if (!v.detail.empty()) os << ": " << v.detail;
            os << "\n";
        }
        for (const auto& line : text) os << line << "\n";
        if (error) os << "error: " << *error << "\n";
        os << (exit_code == kExitOk ? "OK" : "FAILED") << " (exit " << exit_code << ")\n";
        return os.str();
    }
};

/// Runs body, mapping library exceptions to exit codes and verdicts.
inline Report guarded(const std::string& command, std::uint64_t seed, const std::function<void(Report&)>& body) {
    Report r;
    r.command = command;
    r.seed = seed;
    try {
        body(r);
    } catch (const ParseError& e) {
        r.error = e.what();
        r.exit_code = kExitParse;
    } catch (const ValidationError& e) {
        r.add("load.", e.report());
        r.error = e.what();
        r.exit_code = kExitValidation;
    } catch (const StructuralError& e) {
        r.error = e.what();
        r.exit_code = kExitValidation;
    } catch (const GradingError& e) {
        r.error = e.what();
        r.exit_code = kExitValidation;
    } catch (const DomainError& e) {
        r.error = e.what();
        r.exit_code = kExitValidation;
    } catch (const ConsistencyError& e) {
        r.error = e.what();
        r.exit_code = kExitInconsistent;
    } catch (const NumericalError& e) {
        r.error = e.what();
        r.exit_code = kExitInconsistent;
    }
    r.finish();
    return r;
}

namespace detail {

inline Tolerances tolerances(const RunOptions& opt) {
    Tolerances t;
    t.matrix = opt.tolerance;
    return t;
}

inline CategorySpec open_spec(Report& r, const std::string& path, const RunOptions& opt) {
    CategorySpec spec = load_spec(path, tolerances(opt));
    r.spec_name = spec.name;
    r.spec_digest = spec.digest;
    return spec;
}

inline Report::json complex_json(cd z) { return Report::json::array({z.real(), z.imag()}); }

inline Report::json fusion_json(const FusionTable& t) {
    Report::json j;
    j["labels"] = t.labels();
    j["dims"] = t.dims();
    Report::json n = Report::json::array();
    for (std::size_t a = 0; a < t.size(); ++a) {
        Report::json row = Report::json::array();
        for (std::size_t b = 0; b < t.size(); ++b) {
            Report::json cell = Report::json::array();
            for (std::size_t c = 0; c < t.size(); ++c) cell.push_back(t(a, b, c));
            row.push_back(std::move(cell));
        }
        n.push_back(std::move(row));
    }
    j["coefficients"] = std::move(n);
    return j;
}

inline std::vector<std::string> fusion_text(const FusionTable& t) {
    std::vector<std::string> out;
    for (std::size_t a = 0; a < t.size(); ++a)
        for (std::size_t b = a; b < t.size(); ++b) {
            std::string line = t.labels()[a] + " * " + t.labels()[b] + " =";
            bool first = true;
            for (std::size_t c = 0; c < t.size(); ++c) {
                if (t(a, b, c) == 0) continue;
                line += first ? " " : " + ";
                if (t(a, b, c) > 1) line += std::to_string(t(a, b, c)) + " ";
                line += t.labels()[c];
                first = false;
            }
            if (first) line += " 0";
            out.push_back(line);
        }
    return out;
}

/// cat_dim(M) == dim M for each object.
inline Verdict dimension_verdict(const AbelianCocycle& c, const std::vector<GradedObject>& objs, double tol,
                                 Report::json& table) {
    AxiomCheck check{"categorical-dimension"};
    table = Report::json::array();
    for (const auto& m : objs) {
        const cd d = cat_dim(c, m);
        table.push_back({{"object", m.label}, {"dim", m.dim}, {"cat_dim", complex_json(d)}});
        check.record(std::abs(d - cd(double(m.dim), 0.0)) <= tol, [&] { return m.label; });
    }
    return Verdict::from("dimension.", check);
}

}  // namespace detail

inline Report cmd_verify(const std::string& spec_path, const RunOptions& opt = {}) {
    return guarded("verify", opt.seed, [&](Report& r) {
        const CategorySpec spec = detail::open_spec(r, spec_path, opt);
        r.add("cocycle.", validate_cocycle(spec.cocycle));
        const SuiteOptions suite{detail::tolerances(opt), opt.max_product_dim};

        if (spec.su2_mode()) {
            const auto objs = spec.su2_objects();
            r.add("coherence.", coherence_suite(spec.cocycle, objs, 0, suite));
            r.verdicts.push_back(detail::dimension_verdict(spec.cocycle, objs, opt.tolerance, r.tables["dimensions"]));
            AxiomCheck s{"su2-trace"};
            for (const auto& m : objs)
                for (const auto& n : objs) {
                    const int a = static_cast<int>(m.dim - 1), b = static_cast<int>(n.dim - 1);
                    s.record(std::abs(s_entry(spec.cocycle, m, n) - cd(double(su2_smatrix(a, b, spec.cocycle)), 0.0)) <=
                                 opt.tolerance,
                             [&] { return "(" + m.label + ", " + n.label + ")"; });
                }
            r.verdicts.push_back(Verdict::from("smatrix.", s));
            return;
        }

        const TwistedCategory C = spec.category(false);
        r.verdicts.push_back({"irreps.valid", true, C.catalog().size(), 0, std::nullopt, {}});
        bool complete = false;
        if (spec.complete) {
            try {
                check_complete_catalog(C.group(), C.catalog());
                r.verdicts.push_back(Verdict::single("irreps.catalog-completeness", true));
                complete = true;
            } catch (const ValidationError& e) {
                r.add("irreps.", e.report());
                r.verdicts.back().detail = e.what();
            }
        }
        if (!C.catalog().empty()) {
            r.add("coherence.", C.coherence_suite(opt.max_product_dim));
            r.verdicts.push_back(Verdict::from("coherence.", C.naturality_spotcheck(opt.seed)));
        }
        r.verdicts.push_back(detail::dimension_verdict(C.cocycle(), C.objects(), opt.tolerance, r.tables["dimensions"]));
        if (complete) {
            const TwistedCategory full = spec.category(true);
            const std::int64_t order = group_order_identity(full);
            r.verdicts.push_back(Verdict::single("dimension.group-order", order == full.group().order(),
                                                 std::to_string(order) + " = |G|"));
            r.tables["group_order"] = order;
            const FusionTable t = fusion_table(full);
            r.add("fusion.", t.check_invariants());
            r.verdicts.push_back(Verdict::from("fusion.", t.check_associativity()));
        }
    });
}

inline Report cmd_fusion(const std::string& spec_path, const RunOptions& opt = {}) {
    return guarded("fusion", opt.seed, [&](Report& r) {
        const CategorySpec spec = detail::open_spec(r, spec_path, opt);
        if (spec.su2_mode()) {
            const int n = *spec.su2_max_spin;
            Report::json products = Report::json::array();
            AxiomCheck dim{"fusion-dimension-rule"}, sym{"fusion-symmetry"};
            for (int a = 0; a <= n; ++a)
                for (int b = 0; b <= n; ++b) {
                    const SU2Object prod = su2_tensor(a, b);
                    dim.record(prod.dim() == std::int64_t(a + 1) * (b + 1),
                               [&] { return "(" + std::to_string(a) + ", " + std::to_string(b) + ")"; });
                    sym.record(prod == su2_tensor(b, a),
                               [&] { return "(" + std::to_string(a) + ", " + std::to_string(b) + ")"; });
                    products.push_back({{"m", a}, {"n", b}, {"spins", prod.spins}});
                    if (b < a) continue;
                    std::string line = "V(" + std::to_string(a) + ") * V(" + std::to_string(b) + ") =";
                    for (std::size_t k = 0; k < prod.spins.size(); ++k)
                        line += (k ? " + V(" : " V(") + std::to_string(prod.spins[k]) + ")";
                    r.text.push_back(line);
                }
            r.verdicts.push_back(Verdict::from("fusion.", dim));
            r.verdicts.push_back(Verdict::from("fusion.", sym));
            r.tables["fusion"] = {{"mode", "su2"}, {"max_spin", n}, {"products", std::move(products)}};
            return;
        }
        const TwistedCategory C = spec.category(true);
        const FusionTable t = fusion_table(C);
        r.add("fusion.", t.check_invariants());
        r.verdicts.push_back(Verdict::from("fusion.", t.check_associativity()));
        r.verdicts.push_back(Verdict::single("fusion.projector-agreement", t == fusion_table_by_projector(C)));
        r.tables["fusion"] = detail::fusion_json(t);
        r.text = detail::fusion_text(t);
    });
}

namespace detail {

inline void su2_smatrix_into(Report& r, const AbelianCocycle& c, int max_spin, double tol) {
    Report::json rows = Report::json::array();
    AxiomCheck trace{"matrix-trace"};
    for (int m = 0; m <= max_spin; ++m) {
        Report::json row = Report::json::array();
        std::string line;
        for (int n = 0; n <= max_spin; ++n) {
            const std::int64_t s = su2_smatrix(m, n, c);
            row.push_back(s);
            line += (n ? " " : "") + std::to_string(s);
            trace.record(std::abs(s_entry(c, su2_object(m), su2_object(n)) - cd(double(s), 0.0)) <= tol,
                         [&] { return "(" + std::to_string(m) + ", " + std::to_string(n) + ")"; });
        }
        rows.push_back(std::move(row));
        r.text.push_back(line);
    }
    r.verdicts.push_back(Verdict::from("smatrix.", trace));
    r.tables["smatrix"] = {{"mode", "su2"}, {"max_spin", max_spin}, {"entries", std::move(rows)}};
}

}  // namespace detail

inline Report cmd_smatrix(const std::string& spec_path, const RunOptions& opt = {}) {
    return guarded("smatrix", opt.seed, [&](Report& r) {
        const CategorySpec spec = detail::open_spec(r, spec_path, opt);
        if (spec.su2_mode()) {
            detail::su2_smatrix_into(r, spec.cocycle, *spec.su2_max_spin, opt.tolerance);
            return;
        }
        const TwistedCategory C = spec.category(false);
        const auto objs = C.objects();
        Report::json re = Report::json::array(), im = Report::json::array(), exact = Report::json::array();
        AxiomCheck oracle{"double-braiding-formula"}, sym{"symmetry"};
        for (const auto& m : objs) {
            Report::json rr = Report::json::array(), ri = Report::json::array(), rx = Report::json::array();
            std::string line = m.label + ":";
            for (const auto& n : objs) {
                const cd s = s_entry(C.cocycle(), m, n);
                const UnitScalar phase = double_braiding_scalar(C.cocycle(), m.grade, n.grade);
                const std::int64_t dd = m.dim * n.dim;
                const std::string form = phase.is_one() ? std::to_string(dd) : "e(" + phase.exponent().str() + ")*" + std::to_string(dd);
                oracle.record(std::abs(s - phase.to_complex() * double(dd)) <= opt.tolerance,
                              [&] { return "(" + m.label + ", " + n.label + ")"; });
                sym.record(std::abs(s - s_entry(C.cocycle(), n, m)) <= opt.tolerance,
                           [&] { return "(" + m.label + ", " + n.label + ")"; });
                rr.push_back(s.real());
                ri.push_back(s.imag());
                rx.push_back(form);
                line += " " + form;
            }
            re.push_back(std::move(rr));
            im.push_back(std::move(ri));
            exact.push_back(std::move(rx));
            r.text.push_back(line);
        }
        r.verdicts.push_back(Verdict::from("smatrix.", oracle));
        r.verdicts.push_back(Verdict::from("smatrix.", sym));
        std::vector<std::string> labels;
        for (const auto& m : objs) labels.push_back(m.label);
        r.tables["smatrix"] = {{"labels", labels}, {"re", re}, {"im", im}, {"exact", exact}};
    });
}

/// su2 mode without a spec file: grading Z/2 with build_cyclic(2, s).
inline Report cmd_smatrix_su2(int max_spin, std::int64_t s, const RunOptions& opt = {}) {
    return guarded("smatrix", opt.seed, [&](Report& r) {
        if (max_spin < 0 || max_spin > kSu2MaxSpin) throw DomainError("max spin out of range");
        r.spec_name = "su2 cyclic(2," + std::to_string(s) + ")";
        detail::su2_smatrix_into(r, AbelianCocycle::build_cyclic(2, s), max_spin, opt.tolerance);
    });
}

struct MonodromyArgs {
    std::optional<cd> z1, z2;
    std::vector<cd> path;
    bool clockwise_loop = false;
    std::vector<std::string> grades;
};

/// "1", "(1,0)" or "1,0" (multi-factor) into an element of A.
inline GroupElt parse_grade_text(const FinAbGroup& A, std::string text) {
    std::erase_if(text, [](char ch) { return ch == ' ' || ch == '(' || ch == ')'; });
    std::vector<std::int64_t> v;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ',');) {
        try {
            std::size_t pos = 0;
            v.push_back(std::stoll(part, &pos));
            if (pos != part.size()) throw ParseError("");
        } catch (const std::exception&) {
            throw ParseError("bad grade '" + text + "'");
        }
    }
    if (v.size() != A.rank()) throw ParseError("grade '" + text + "' is not an element of " + A.str());
    return A.elt(v);
}

inline Report cmd_monodromy(const std::string& spec_path, const MonodromyArgs& args, const RunOptions& opt = {}) {
    return guarded("monodromy", opt.seed, [&](Report& r) {
        const CategorySpec spec = detail::open_spec(r, spec_path, opt);
        const AbelianCocycle& c = spec.cocycle;
        std::vector<GroupElt> g;
        for (const auto& t : args.grades) g.push_back(parse_grade_text(c.group(), t));
        std::vector<std::string> gs;
        for (const auto& e : g) gs.push_back(e.str());
        r.tables["grades"] = gs;

        if (args.z1 || args.z2) {
            if (!args.z1 || !args.z2) throw ParseError("monodromy needs both z1 and z2");
            const cd z1 = *args.z1, z2 = *args.z2;
            Report::json a{{"z1", detail::complex_json(z1)}, {"z2", detail::complex_json(z2)}};
            std::optional<std::string> violated;
            if (g.size() == 3) {
                try {
                    check_assoc_region(z1, z2);
                } catch (const DomainError& e) {
                    violated = e.what();
                }
                r.verdicts.push_back(Verdict::single("monodromy.region", !violated, violated.value_or("")));
            }
            if (!violated) {
                const std::int64_t p12 = p_int(z1, z2);
                a["p12"] = p12;
                r.text.push_back("p_{z1,z2} = " + std::to_string(p12));
            }
            if (g.size() == 3 && !violated) {
                const AssocBranch br = assoc_branch(z1, z2);
                const UnitScalar A = assoc_scalar(c, z1, z2, g[0], g[1], g[2]);
                a["p2_21"] = br.p2_21;
                a["assoc_exponent"] = A.exponent().str();
                r.text.push_back("p_{z2,z2-z1} = " + std::to_string(br.p2_21));
                r.text.push_back("A_{z1,z2} = e(" + A.exponent().str() + ")");
            } else if (g.size() != 3 && !g.empty() && args.path.empty() && !args.clockwise_loop) {
                throw ParseError("associativity scalars need three grades");
            }
            r.tables["assoc"] = std::move(a);
        }

        if (!args.path.empty() || args.clockwise_loop) {
            if (g.size() < 2) throw ParseError("transport needs two grades");
            const PathPolyline path = args.clockwise_loop ? clockwise_unit_loop() : PathPolyline(args.path);
            const std::int64_t p = winding(path);
            const UnitScalar T = transport_scalar(c, path, g[0], g[1]);
            Report::json pts = Report::json::array();
            for (const auto& z : path.waypoints()) pts.push_back(detail::complex_json(z));
            r.tables["transport"] = {{"waypoints", std::move(pts)}, {"winding", p}, {"exponent", T.exponent().str()}};
            r.text.push_back("winding = " + std::to_string(p));
            r.text.push_back("transport = e(" + T.exponent().str() + ")");
            if (args.clockwise_loop)
                r.verdicts.push_back(Verdict::single("monodromy.loop-identity",
                                                     T == double_braiding_scalar(c, g[0], g[1])));
        }
    });
}

}  // namespace twistrep
