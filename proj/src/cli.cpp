#include "chern/cli.hpp"

#include "chern/bounds.hpp"
#include "chern/catalog.hpp"
#include "chern/chern_data.hpp"
#include "chern/json_io.hpp"
#include "chern/riemann_roch.hpp"
#include "chern/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>

namespace chern {

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) {
        out.push_back(cur);
    }
    if (!s.empty() && s.back() == sep) {
        out.emplace_back();
    }
    return out;
}

Integer parse_integer(const std::string& s) {
    Integer x;
    std::string t = s;
    t.erase(std::remove_if(t.begin(), t.end(), ::isspace), t.end());
    if (!t.empty() && t.front() == '+') {
        t.erase(t.begin());
    }
    if (t.empty() || x.set_str(t, 10) != 0) {
        throw UsageError("not an integer: '" + s + "'");
    }
    return x;
}

long parse_long(const std::string& s) {
    const Integer x = parse_integer(s);
    if (!x.fits_slong_p()) {
        throw UsageError("integer out of range: " + s);
    }
    return x.get_si();
}

std::vector<Integer> parse_integers(const std::string& s) {
    std::vector<Integer> out;
    if (s.empty()) {
        return out;
    }
    for (const auto& part : split_on(s, ',')) {
        out.push_back(parse_integer(part));
    }
    return out;
}

SplittingType parse_splitting(const std::string& s) {
    std::vector<long> e;
    for (const auto& part : split_on(s, ',')) {
        e.push_back(parse_long(part));
    }
    return SplittingType(std::move(e));
}

// "0,0;0,-1;-1,-1", with "_" for an absent row.
GstMatrix parse_gst(const std::string& s) {
    std::vector<std::optional<SplittingType>> rows;
    for (const auto& part : split_on(s, ';')) {
        if (part == "_" || part == "-") {
            rows.emplace_back();
        } else {
            rows.emplace_back(parse_splitting(part));
        }
    }
    const int n = static_cast<int>(rows.size());
    return GstMatrix(n, std::move(rows));
}

ChernData parse_chern(long rank, const std::string& classes, int ambient = 0) {
    std::vector<Integer> c = parse_integers(classes);
    if (ambient > 0) {
        if (c.size() > static_cast<std::size_t>(ambient)) {
            throw UsageError("more classes than the ambient dimension");
        }
        c.resize(static_cast<std::size_t>(ambient));
    }
    const int n = static_cast<int>(c.size());
    return ChernData(n, rank, std::move(c));
}

Json chern_json(const ChernData& c) {
    return Json{{"ambient_dim", c.ambient_dim()}, {"rank", c.rank()}, {"classes", to_json(c)}};
}

Json poly_json(const Polynomial& p) { return Json{{"coefficients", to_json(p)}, {"text", p.str()}}; }

std::string compact(const Json& j) {
    if (j.is_string()) {
        return j.get<std::string>();
    }
    if (j.is_object() && j.contains("text") && j.size() == 2) {
        return j.at("text").get<std::string>();
    }
    return j.dump();
}

std::string text_of(const Json& j) {
    if (!j.is_object()) {
        return compact(j) + "\n";
    }
    std::string out;
    for (const auto& [k, v] : j.items()) {
        out += k + ": " + compact(v) + "\n";
    }
    return out;
}

std::string read_text(const std::string& path) {
    if (path.empty() || path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read " + path);
    }
    return std::string(std::istreambuf_iterator<char>(in), {});
}

std::string verify_text(const std::vector<VerificationReport>& reps) {
    std::ostringstream os;
    std::size_t failed = 0;
    for (const auto& r : reps) {
        os << r.descriptor << "  " << r.overall();
        std::vector<std::string> sharp;
        for (const auto& b : r.reports) {
            if (b.verdict == Verdict::equality) {
                sharp.push_back(b.name);
            }
            if (b.verdict == Verdict::violated) {
                os << "\n  violated " << b.name << ": " << b.note;
            }
        }
        if (!sharp.empty()) {
            os << "  sharp:";
            for (const auto& s : sharp) {
                os << " " << s;
            }
        }
        os << "\n";
        failed += r.pass() ? 0 : 1;
    }
    os << reps.size() << " descriptors, " << failed << " failed\n";
    return os.str();
}

std::string sval(const CLI::App* sc, const std::string& name, const std::string& def = {}) {
    const CLI::Option* o = sc->get_option(name);
    return o->count() ? o->as<std::string>() : def;
}

bool fval(const CLI::App* sc, const std::string& name) { return sc->get_option(name)->count() > 0; }

long lval(const CLI::App* sc, const std::string& name, long def = 0) {
    const std::string v = sval(sc, name);
    return v.empty() ? def : parse_long(v);
}

}  // namespace

CommandResult execute(const std::vector<std::string>& args) {
    CLI::App app{"Chern classes, Euler characteristics and bounds for sheaves on P^N", "chernctl"};
    app.fallthrough();
    app.require_subcommand(0, 1);
    app.add_flag("--json", "JSON payload");
    app.add_flag("--check", "re-emit a JSON payload in canonical form");
    app.add_option("--input", "file for --check (default stdin)");

    // chern ---------------------------------------------------------------
    auto* chern_cmd = app.add_subcommand("chern", "Chern class calculus");
    chern_cmd->require_subcommand(1);

    auto* c_split = chern_cmd->add_subcommand("split", "classes of O(b_1)+...+O(b_n)");
    c_split->add_option("--b", "splitting type, e.g. 2,0,-1")->required();
    c_split->add_option("--ambient", "N")->required();

    auto* c_twist = chern_cmd->add_subcommand("twist", "classes of F(l)");
    c_twist->add_option("--rank")->required();
    c_twist->add_option("--classes", "c_1,...,c_N")->required();
    c_twist->add_option("--by", "twist l");
    c_twist->add_flag("--symbolic", "classes as polynomials in t");

    auto* c_whitney = chern_cmd->add_subcommand("whitney", "extension 0 -> sub -> F -> quot -> 0");
    c_whitney->add_option("--sub-rank")->required();
    c_whitney->add_option("--sub")->required();
    c_whitney->add_option("--quot-rank")->required();
    c_whitney->add_option("--quot")->required();

    auto* c_quot = chern_cmd->add_subcommand("quotient", "quotient factor of an extension");
    c_quot->add_option("--total-rank")->required();
    c_quot->add_option("--total")->required();
    c_quot->add_option("--sub-rank")->required();
    c_quot->add_option("--sub")->required();

    auto* c_dual = chern_cmd->add_subcommand("dual", "dual classes");
    auto* c_restrict = chern_cmd->add_subcommand("restrict", "restriction to a hyperplane");
    auto* c_disc = chern_cmd->add_subcommand("discriminant", "2n c2 - (n-1) c1^2");
    for (auto* sc : {c_dual, c_restrict, c_disc}) {
        sc->add_option("--rank")->required();
        sc->add_option("--classes")->required();
    }
    auto* c_tail = chern_cmd->add_subcommand("tail", "c_s(F(t)) for s > rank");
    c_tail->add_option("--rank")->required();
    c_tail->add_option("--classes")->required();
    c_tail->add_option("--s")->required();

    auto* c_koszul = chern_cmd->add_subcommand("koszul", "ideal sheaf of points, a line or a complete intersection");
    c_koszul->add_option("--ambient")->required();
    auto* kopts = c_koszul->add_option_group("shape");
    kopts->add_option("--points", "M general points");
    kopts->add_flag("--line");
    kopts->add_option("--ci", "degrees d1,d2");
    kopts->require_option(1);

    // chi -------------------------------------------------------------------
    auto* chi_cmd = app.add_subcommand("chi", "Euler characteristic");
    chi_cmd->add_option("--rank")->required();
    chi_cmd->add_option("--ambient")->required();
    chi_cmd->add_option("--classes", "c_1,...; missing classes are 0");
    chi_cmd->add_flag("--symbolic", "chi(F(t)) as a polynomial");

    // bounds ------------------------------------------------------------------
    auto* bounds_cmd = app.add_subcommand("bounds", "bound evaluators");
    bounds_cmd->require_subcommand(1);
    auto* b_grossa = bounds_cmd->add_subcommand("grossa", "lower bound for h0 O(b) - h0 F from gst rows");
    b_grossa->add_option("--gst", "rows a_1;...;a_N, '_' for absent")->required();
    b_grossa->add_flag("--literal", "h0 over P^N in the first sum");
    b_grossa->add_option("--t", "twist; switches to the twisted form");

    auto* b_c2 = bounds_cmd->add_subcommand("c2", "lower bound for c2 from b and the plane-section type");
    b_c2->add_option("--b")->required();
    b_c2->add_option("--a")->required();

    auto* b_delta = bounds_cmd->add_subcommand("delta", "discriminant floors for no-gap splitting types");
    b_delta->add_option("--n")->required();
    b_delta->add_option("--c1")->required();

    auto* b_semi = bounds_cmd->add_subcommand("semistable", "discriminant floor for (semi)stable sheaves");
    b_semi->add_option("--n")->required();
    b_semi->add_flag("--stable");

    auto* b_lambda = bounds_cmd->add_subcommand("lambda", "c_s(F(t)) - c_s(O(b)(t))");
    b_lambda->add_option("--rank")->required();
    b_lambda->add_option("--classes")->required();
    b_lambda->add_option("--b")->required();
    b_lambda->add_option("--s")->required();

    auto* b_pqc = bounds_cmd->add_subcommand("pqc", "cohomology, vanishing and Chern bounds");
    b_pqc->add_option("--rank");
    b_pqc->add_option("--ambient")->required();
    b_pqc->add_option("--b");
    b_pqc->add_option("--c1");
    b_pqc->add_option("--c2");
    b_pqc->add_option("--d");
    b_pqc->add_option("--delta2");

    auto* b_h0 = bounds_cmd->add_subcommand("h0", "section bounds from b (and the plane-section type)");
    b_h0->add_option("--b")->required();
    b_h0->add_option("--ambient")->required();
    b_h0->add_option("--a", "plane-section type, for the refined bound");

    auto* b_window = bounds_cmd->add_subcommand("window", "twists t with c2(F(t)) <= 0");
    b_window->add_option("--rank")->required();
    b_window->add_option("--classes")->required();
    b_window->add_option("--b", "splitting type, for the size check");

    // catalog -------------------------------------------------------------------
    auto* cat_cmd = app.add_subcommand("catalog", "builtin and user descriptors");
    cat_cmd->require_subcommand(1);
    auto* cat_list = cat_cmd->add_subcommand("list", "descriptor names");
    auto* cat_verify = cat_cmd->add_subcommand("verify", "run every bound against descriptors");
    cat_verify->add_option("--name");
    cat_verify->add_option("--file", "descriptor or catalog JSON");
    auto* cat_dump = cat_cmd->add_subcommand("dump", "descriptors as JSON");
    cat_dump->add_option("--name");
    cat_dump->add_option("--file");
    auto* cat_generate = cat_cmd->add_subcommand("generate", "rebuild the builtin catalog document");

    // sweep ---------------------------------------------------------------------
    auto* sweep_cmd = app.add_subcommand("sweep", "exhaustive checks");
    sweep_cmd->require_subcommand(1);
    auto* sw_nogap = sweep_cmd->add_subcommand("nogap", "extremal no-gap sequence against brute force");
    sw_nogap->add_option("--n")->required();
    sw_nogap->add_option("--c1-range", "lo:hi");

    CommandResult res;
    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        res.payload = app.help();
        return res;
    } catch (const CLI::CallForAllHelp&) {
        res.payload = app.help("", CLI::AppFormatMode::All);
        return res;
    } catch (const CLI::ParseError& e) {
        res.exit_code = 2;
        res.error = std::string(e.what()) + "\n" + app.help();
        return res;
    }

    const bool json = fval(&app, "--json");
    auto emit = [&](const Json& j, const std::string& text = {}) {
        res.payload = json ? dump(j) : (text.empty() ? text_of(j) : text);
    };

    try {
        if (fval(&app, "--check")) {
            const std::string text = read_text(sval(&app, "--input"));
            Json j = Json::parse(text);
            // Verification reports also carry "descriptors", but never "overall" in a catalog.
            const bool catalog_doc = j.is_object() && j.contains("descriptors") && !j.contains("overall");
            const bool descriptor = j.is_object() && j.contains("splitting") && j.contains("chern");
            if (catalog_doc) {
                j = to_json(catalog_from_json(text));
            } else if (descriptor) {
                j = to_json(descriptor_from_json(j));
            }
            res.payload = dump(j);
            return res;
        }
        if (app.get_subcommands().empty()) {
            throw UsageError("a subcommand is required");
        }
        auto chern_of = [](const CLI::App* sc, const std::string& rank_opt, const std::string& cls_opt,
                           int ambient = 0) {
            return parse_chern(lval(sc, rank_opt), sval(sc, cls_opt), ambient);
        };
        auto ambient_of = [](const CLI::App* sc) {
            const long a = lval(sc, "--ambient");
            if (a < 1 || a > 64) {
                throw UsageError("--ambient must be in 1..64");
            }
            return static_cast<int>(a);
        };

        if (chern_cmd->parsed()) {
            if (c_split->parsed()) {
                emit(chern_json(split_chern(parse_splitting(sval(c_split, "--b")), ambient_of(c_split))));
            } else if (c_twist->parsed()) {
                const ChernData c = chern_of(c_twist, "--rank", "--classes");
                if (fval(c_twist, "--symbolic")) {
                    Json a = Json::array();
                    std::string text;
                    const TwistedChern tc = twist_symbolic(c);
                    for (int i = 1; i <= c.ambient_dim(); ++i) {
                        a.push_back(poly_json(tc.c(i)));
                        text += "c" + std::to_string(i) + "(t) = " + tc.c(i).str() + "\n";
                    }
                    emit(Json{{"classes", a}}, text);
                } else {
                    emit(chern_json(twist_numeric(c, lval(c_twist, "--by"))));
                }
            } else if (c_whitney->parsed()) {
                emit(chern_json(whitney(chern_of(c_whitney, "--sub-rank", "--sub"),
                                        chern_of(c_whitney, "--quot-rank", "--quot"))));
            } else if (c_quot->parsed()) {
                emit(chern_json(whitney_quotient(chern_of(c_quot, "--total-rank", "--total"),
                                                 chern_of(c_quot, "--sub-rank", "--sub"))));
            } else if (c_dual->parsed()) {
                emit(chern_json(dual(chern_of(c_dual, "--rank", "--classes"))));
            } else if (c_restrict->parsed()) {
                emit(chern_json(restrict_hyperplane(chern_of(c_restrict, "--rank", "--classes"))));
            } else if (c_disc->parsed()) {
                emit(Json{{"discriminant", to_json(discriminant(chern_of(c_disc, "--rank", "--classes")))}});
            } else if (c_tail->parsed()) {
                emit(poly_json(high_chern_tail(chern_of(c_tail, "--rank", "--classes"),
                                               static_cast<int>(lval(c_tail, "--s")))));
            } else if (c_koszul->parsed()) {
                Subvariety y = Subvariety::line();
                if (fval(c_koszul, "--points")) {
                    y = Subvariety::points(lval(c_koszul, "--points"));
                } else if (fval(c_koszul, "--ci")) {
                    const auto d = parse_integers(sval(c_koszul, "--ci"));
                    if (d.size() != 2 || !d[0].fits_slong_p() || !d[1].fits_slong_p()) {
                        throw UsageError("--ci needs two degrees");
                    }
                    y = Subvariety::complete_intersection(d[0].get_si(), d[1].get_si());
                }
                emit(chern_json(chern_from_koszul(y, ambient_of(c_koszul))));
            }
        } else if (chi_cmd->parsed()) {
            const ChernData c = chern_of(chi_cmd, "--rank", "--classes", ambient_of(chi_cmd));
            if (fval(chi_cmd, "--symbolic")) {
                emit(poly_json(euler_char_poly(c)));
            } else {
                emit(to_json(euler_char(c)));
            }
        } else if (bounds_cmd->parsed()) {
            if (b_grossa->parsed()) {
                const GstMatrix m = parse_gst(sval(b_grossa, "--gst"));
                if (fval(b_grossa, "--t")) {
                    const long t = lval(b_grossa, "--t");
                    emit(Json{{"rigrossa", to_json(rigrossa_rhs(m, t))}, {"t", t}});
                } else {
                    const bool literal = fval(b_grossa, "--literal");
                    emit(Json{{"grossa", to_json(grossa_rhs(m, literal ? GrossaReading::literal
                                                                       : GrossaReading::section_dim))},
                              {"reading", literal ? "literal" : "section_dim"}});
                }
            } else if (b_c2->parsed()) {
                emit(Json{{"c2_lower", to_json(c2_lower(parse_splitting(sval(b_c2, "--b")),
                                                        parse_splitting(sval(b_c2, "--a"))))}});
            } else if (b_delta->parsed()) {
                const long n = lval(b_delta, "--n");
                emit(Json{{"domenica", to_json(delta_lower_nogap(n, lval(b_delta, "--c1")))},
                          {"mattina", to_json(delta_lower_uniform(n))}});
            } else if (b_semi->parsed()) {
                const bool stable = fval(b_semi, "--stable");
                emit(Json{{"floor", to_json(semistable_delta_floor(lval(b_semi, "--n"), stable))},
                          {"stable", stable}});
            } else if (b_lambda->parsed()) {
                emit(poly_json(lambda_s(chern_of(b_lambda, "--rank", "--classes"),
                                        parse_splitting(sval(b_lambda, "--b")),
                                        static_cast<int>(lval(b_lambda, "--s")))));
            } else if (b_pqc->parsed()) {
                InvariantInput in;
                in.rank = lval(b_pqc, "--rank");
                if (fval(b_pqc, "--b")) {
                    in.b = parse_splitting(sval(b_pqc, "--b"));
                }
                if (fval(b_pqc, "--c1")) {
                    in.c1 = parse_integer(sval(b_pqc, "--c1"));
                }
                if (fval(b_pqc, "--c2")) {
                    in.c2 = parse_integer(sval(b_pqc, "--c2"));
                }
                if (fval(b_pqc, "--delta2")) {
                    in.delta2 = parse_integer(sval(b_pqc, "--delta2"));
                }
                if (fval(b_pqc, "--d")) {
                    in.d = lval(b_pqc, "--d");
                }
                const int ambient = ambient_of(b_pqc);
                const CohomologyBounds cb = cohomology_bounds(invariant_convert(in), ambient);
                const RegularityBound rb = regularity_bound(cb, ambient);
                Json j = to_json(cb);
                j["regularity"] = to_json(rb.regularity);
                j["generation"] = to_json(rb.generation);
                emit(j);
            } else if (b_h0->parsed()) {
                const SplittingType b = parse_splitting(sval(b_h0, "--b"));
                const int ambient = ambient_of(b_h0);
                Json j{{"h0_upper", to_json(h0_upper(b, ambient))},
                       {"hN_upper", to_json(hN_upper(b, ambient))}};
                if (fval(b_h0, "--a")) {
                    const SplittingType a = parse_splitting(sval(b_h0, "--a"));
                    j["menogrande2"] = to_json(menogrande2_rhs(b, a, ambient));
                    j["menogrande"] = to_json(menogrande_rhs(b, a, ambient));
                }
                emit(j);
            } else if (b_window->parsed()) {
                const TwistWindow w = negative_c2_window(chern_of(b_window, "--rank", "--classes"));
                Json j{{"unbounded", w.unbounded}, {"values", w.values}, {"size", w.values.size()}};
                if (fval(b_window, "--b")) {
                    j["allowed"] = std::max<long>(0, parse_splitting(sval(b_window, "--b")).diameter() - 1);
                }
                emit(j);
            }
        } else if (cat_cmd->parsed()) {
            if (cat_generate->parsed()) {
                res.payload = dump(to_json(generate_builtin_catalog()));
                return res;
            }
            const CLI::App* sc = cat_list->parsed() ? cat_list : (cat_dump->parsed() ? cat_dump : cat_verify);
            const std::string file = sc == cat_list ? std::string() : sval(sc, "--file");
            const std::string name = sc == cat_list ? std::string() : sval(sc, "--name");
            std::vector<SheafDescriptor> loaded;
            if (!file.empty()) {
                loaded = catalog_from_json(read_text(file));
            }
            const std::vector<SheafDescriptor>& cat = file.empty() ? builtin_catalog() : loaded;
            std::vector<SheafDescriptor> chosen;
            if (!name.empty()) {
                chosen.push_back(find_descriptor(cat, name));
            } else {
                chosen = cat;
            }
            if (cat_list->parsed()) {
                Json a = Json::array();
                std::string text;
                for (const auto& d : chosen) {
                    a.push_back(d.name);
                    text += d.name + "\n";
                }
                emit(a, text);
            } else if (cat_dump->parsed()) {
                res.payload = dump(to_json(chosen));
            } else {
                const auto reps = verify_all(chosen);
                Json a = Json::array();
                bool pass = true;
                for (const auto& r : reps) {
                    a.push_back(to_json(r));
                    pass = pass && r.pass();
                }
                emit(Json{{"overall", pass ? "pass" : "fail"}, {"descriptors", a}}, verify_text(reps));
                res.exit_code = pass ? 0 : 1;
            }
        } else if (sweep_cmd->parsed()) {
            const long n = lval(sw_nogap, "--n");
            const auto parts = split_on(sval(sw_nogap, "--c1-range", "-4:4"), ':');
            if (parts.size() != 2) {
                throw UsageError("--c1-range must look like lo:hi");
            }
            const long lo = parse_long(parts[0]);
            const long hi = parse_long(parts[1]);
            if (hi - lo > 100000) {
                throw UsageError("--c1-range too wide");
            }
            Json rows = Json::array();
            std::string text;
            long mismatches = 0;
            for (long c1 = lo; c1 <= hi; ++c1) {
                const SplittingType s = extremal_nogap_sequence(n, c1);
                const Integer brute = brute_force_max_sumsq(n, c1);
                const bool ok = s.sum_of_squares() == brute;
                mismatches += ok ? 0 : 1;
                rows.push_back(Json{{"c1", c1},
                                    {"sequence", s.entries()},
                                    {"sum_of_squares", to_json(s.sum_of_squares())},
                                    {"brute_force", to_json(brute)},
                                    {"match", ok}});
                text += "c1=" + std::to_string(c1) + " " + s.str() + " sumsq=" +
                        s.sum_of_squares().get_str() + " brute=" + brute.get_str() +
                        (ok ? "" : " MISMATCH") + "\n";
            }
            emit(Json{{"n", n}, {"rows", rows}, {"mismatches", mismatches}}, text);
        }
    } catch (const std::exception& e) {
        res.exit_code = 2;
        res.payload.clear();
        res.error = std::string("error: ") + e.what() + "\n";
    }
    return res;
}

}  // namespace chern
