// orbiclass — classify periodic orientation-reversing surface
// homeomorphisms by their monodromy data on the quotient orbifold.
//
// Subcommands: validate, invariants, equivalent, orbit, witness, census,
// verify, embeddable, orientable-pair, cover-genus. Input is JSON (file
// path or inline document); output is an aligned text table, or JSON
// with --json. Identical invocations produce byte-identical output.
//
// Exit codes: 0 success, 1 validation or usage error, 2 breadth-first
// search cap exceeded, 3 verify found violations.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "orbiclass/orbiclass.hpp"

namespace {

using orbiclass::json;

// Thrown by handlers after the diagnostic is already printed.
struct CliFailure {
    int code;
};

std::string fmt_list(const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

std::string fmt_datum(const orbiclass::MonodromyDatum& m) {
    return "d " + fmt_list(m.d) + "  x " + fmt_list(m.x);
}

std::string fmt_set(const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "}";
}

std::string fmt_h1(const std::optional<int>& h1) {
    return h1 ? std::to_string(*h1) : "-";
}

std::string fmt_h2(const orbiclass::InvariantTuple& t) {
    if (!t.h2) return "-";
    return fmt_set(t.h2->values) + " mod " + std::to_string(t.h2->modulus);
}

void print_kv(const std::string& key, const std::string& value) {
    std::printf("%-14s %s\n", key.c_str(), value.c_str());
}

void print_tuple_text(const orbiclass::InvariantTuple& t) {
    print_kv("two_q", std::to_string(t.two_q));
    print_kv("genus", std::to_string(t.genus));
    print_kv("isotropy", fmt_list(t.isotropy));
    print_kv("h1", fmt_h1(t.h1));
    print_kv("l", std::to_string(t.l));
    if (t.h2) print_kv("h2", fmt_h2(t));
    print_kv("h2_applicable", t.h2_applicable ? "true" : "false");
    print_kv("cover_genus", std::to_string(t.cover_genus));
}

void print_table(const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty()) return;
    std::vector<std::size_t> width(rows.front().size(), 0);
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            std::string cell = row[c];
            if (c + 1 < row.size()) cell.resize(width[c] + 2, ' ');
            line += cell;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        std::printf("  %s\n", line.c_str());
    }
}

void emit_json(const json& j) { std::printf("%s\n", j.dump(2).c_str()); }

// Loads exactly one JSON document from `source`.
json load_single(const std::string& source) {
    std::vector<json> docs = orbiclass::load_documents(source);
    if (docs.size() != 1) {
        std::fprintf(stderr, "error: expected one JSON document, got %zu\n", docs.size());
        throw CliFailure{1};
    }
    return docs.front();
}

// Parses and validates a datum document; prints the violation list to
// stderr and fails with exit 1 when it is inadmissible.
orbiclass::MonodromyDatum required_datum(const json& doc, const std::string& label) {
    orbiclass::MonodromyDatum raw = doc.get<orbiclass::MonodromyDatum>();
    orbiclass::ValidationResult res = orbiclass::validate(raw);
    if (!res.ok()) {
        std::fprintf(stderr, "error: %s is not a valid monodromy datum:\n", label.c_str());
        for (const orbiclass::ValidationError& e : res.errors)
            std::fprintf(stderr, "  %-13s %s\n", to_string(e.kind), e.detail.c_str());
        throw CliFailure{1};
    }
    return *std::move(res.datum);
}

std::vector<int> parse_csv(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        int v = std::stoi(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad integer \"" + item + "\"");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty cone-order list");
    return out;
}

int run_validate(const std::string& in, bool as_json) {
    json doc = load_single(in);
    orbiclass::MonodromyDatum raw = doc.get<orbiclass::MonodromyDatum>();
    orbiclass::ValidationResult res = orbiclass::validate(raw);
    if (as_json) {
        json out{{"valid", res.ok()}};
        if (res.ok())
            out["datum"] = *res.datum;
        else
            out["errors"] = res.errors;
        emit_json(out);
    } else if (res.ok()) {
        std::printf("valid\n%s\n", fmt_datum(*res.datum).c_str());
    } else {
        std::printf("invalid\n");
        std::vector<std::vector<std::string>> rows;
        for (const orbiclass::ValidationError& e : res.errors)
            rows.push_back({to_string(e.kind), e.detail});
        print_table(rows);
    }
    return res.ok() ? 0 : 1;
}

int run_invariants(const std::string& in, bool as_json) {
    std::vector<json> docs = orbiclass::load_documents(in);
    std::vector<orbiclass::InvariantTuple> tuples;
    for (std::size_t i = 0; i < docs.size(); ++i) {
        orbiclass::MonodromyDatum m =
            required_datum(docs[i], "document " + std::to_string(i + 1));
        tuples.push_back(orbiclass::invariant_tuple(m));
    }
    if (as_json) {
        if (tuples.size() == 1)
            emit_json(json(tuples.front()));
        else
            emit_json(json(tuples));
    } else {
        for (std::size_t i = 0; i < tuples.size(); ++i) {
            if (i) std::printf("\n");
            print_tuple_text(tuples[i]);
        }
    }
    return 0;
}

int run_equivalent(const std::string& a_src, const std::string& b_src, bool as_json) {
    orbiclass::MonodromyDatum a = required_datum(load_single(a_src), "--a");
    orbiclass::MonodromyDatum b = required_datum(load_single(b_src), "--b");
    const bool eq = orbiclass::equivalent(a, b);
    if (as_json)
        emit_json(json{{"equivalent", eq}});
    else
        std::printf("%s\n", eq ? "equivalent" : "inequivalent");
    return 0;
}

int run_orbit(const std::string& in, bool as_json, long long cap) {
    orbiclass::MonodromyDatum m = required_datum(load_single(in), "--in");
    std::vector<orbiclass::MonodromyDatum> orb = orbiclass::orbit(m, cap);
    if (as_json) {
        emit_json(json{{"size", orb.size()}, {"orbit", orb}});
    } else {
        std::printf("orbit size %zu\n", orb.size());
        for (const orbiclass::MonodromyDatum& s : orb)
            std::printf("  %s\n", fmt_datum(s).c_str());
    }
    return 0;
}

int run_witness(const std::string& a_src, const std::string& b_src, bool as_json,
                long long cap) {
    orbiclass::MonodromyDatum a = required_datum(load_single(a_src), "--a");
    orbiclass::MonodromyDatum b = required_datum(load_single(b_src), "--b");
    std::optional<std::vector<orbiclass::Move>> w = orbiclass::witness(a, b, cap);
    if (as_json) {
        emit_json(json{{"witness", w ? json(*w) : json(nullptr)}});
    } else if (!w) {
        std::printf("no witness: data lie in different orbits\n");
    } else if (w->empty()) {
        std::printf("witness: [] (data already equal)\n");
    } else {
        std::string line;
        for (const orbiclass::Move& mv : *w) {
            if (!line.empty()) line += " ";
            line += to_string(mv);
        }
        std::printf("witness: %s\n", line.c_str());
    }
    return 0;
}

int run_census(int two_q, int genus, const orbiclass::CensusConstraint& constraint,
               bool as_json, int threads) {
    orbiclass::CensusReport rep = orbiclass::census(two_q, genus, constraint, threads);
    if (as_json) {
        emit_json(json(rep));
        return 0;
    }
    std::string head = "census two_q " + std::to_string(rep.two_q) + "  genus " +
                       std::to_string(rep.genus);
    if (rep.constraint.r) head += "  r " + std::to_string(*rep.constraint.r);
    if (rep.constraint.cone_orders)
        head += "  cone orders " + fmt_list(*rep.constraint.cone_orders);
    if (rep.constraint.max_cover_genus)
        head += "  max cover genus " + std::to_string(*rep.constraint.max_cover_genus);
    std::printf("%s\n", head.c_str());
    std::printf("total vectors %lld\nclasses %zu\n", rep.total_vectors, rep.classes.size());
    if (rep.classes.empty()) return 0;
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"#", "vectors", "representative", "isotropy", "h1", "l", "h2", "cover"});
    int idx = 0;
    for (const orbiclass::CensusClass& c : rep.classes)
        rows.push_back({std::to_string(++idx), std::to_string(c.vector_count),
                        fmt_datum(c.representative), fmt_list(c.tuple.isotropy),
                        fmt_h1(c.tuple.h1), std::to_string(c.tuple.l), fmt_h2(c.tuple),
                        std::to_string(c.tuple.cover_genus)});
    print_table(rows);
    return 0;
}

int run_verify(int two_q, int genus_max, int r_max, bool as_json, int threads,
               long long cap) {
    orbiclass::VerifyReport rep =
        orbiclass::verify_theorem(two_q, genus_max, r_max, cap, threads);
    if (as_json) {
        emit_json(json(rep));
    } else {
        std::printf("verify two_q %d  genus <= %d  r <= %d  (bfs cap %lld)\n", rep.two_q,
                    rep.genus_max, rep.r_max, rep.bfs_cap);
        std::printf("vectors %lld  orbits %lld  classes %zu\n", rep.total_vectors,
                    rep.total_orbits, rep.classes.size());
        std::vector<std::vector<std::string>> rows;
        rows.push_back({"orbits", "genus", "isotropy", "h1", "l", "h2", "cover"});
        for (const orbiclass::VerifyClass& c : rep.classes)
            rows.push_back({std::to_string(c.orbit_count), std::to_string(c.tuple.genus),
                            fmt_list(c.tuple.isotropy), fmt_h1(c.tuple.h1),
                            std::to_string(c.tuple.l), fmt_h2(c.tuple),
                            std::to_string(c.tuple.cover_genus)});
        print_table(rows);
        std::printf("soundness violations %zu\n", rep.soundness_violations.size());
        std::printf("completeness violations %zu\n", rep.completeness_violations.size());
    }
    if (!rep.soundness_violations.empty())
        std::fprintf(stderr, "*** SOUNDNESS VIOLATION: an orbit carries two distinct "
                             "invariant tuples ***\n");
    for (const orbiclass::CompletenessViolation& v : rep.completeness_violations)
        std::fprintf(stderr, "completeness violation: class of %s splits into %d orbits\n",
                     fmt_datum(v.orbit_representatives.front()).c_str(), v.orbit_count);
    return rep.ok() ? 0 : 3;
}

int run_embeddable(const std::string& in, bool as_json) {
    orbiclass::MonodromyDatum m = required_datum(load_single(in), "--in");
    orbiclass::EmbeddabilityVerdict v = orbiclass::embeddable(m);
    if (as_json) {
        emit_json(json(v));
    } else {
        if (v.embeddable)
            std::printf("embeddable (condition %d)\n", v.condition);
        else
            std::printf("not embeddable\n");
        for (const std::string& note : v.notes) std::printf("note: %s\n", note.c_str());
    }
    return 0;
}

int run_orientable_pair(const std::string& in, bool as_json) {
    json doc = load_single(in);
    orbiclass::OrientableQuotientDatum raw = doc.get<orbiclass::OrientableQuotientDatum>();
    orbiclass::OrientableQuotientDatum od = orbiclass::make_orientable_datum(
        raw.two_q, raw.genus_orientable, raw.x, raw.c);
    auto [first, second] = orbiclass::orientable_pair_invariant(od);
    if (as_json)
        emit_json(json{{"pair", json::array({first, second})}});
    else
        std::printf("pair %s / %s\n", fmt_set(first).c_str(), fmt_set(second).c_str());
    return 0;
}

int run_cover_genus(const std::string& in, bool as_json) {
    orbiclass::MonodromyDatum m = required_datum(load_single(in), "--in");
    orbiclass::EulerCharacteristic e = orbiclass::cover_genus(m);
    if (as_json) {
        emit_json(json(e));
    } else {
        print_kv("chi", std::to_string(e.chi));
        print_kv("genus_cover", std::to_string(e.genus_cover));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classification of periodic orientation-reversing surface homeomorphisms "
                 "by monodromy data on the quotient orbifold"};
    app.require_subcommand(1);
    int rc = 0;

    struct {
        std::string in, a, b, cone_orders;
        int two_q = 0, genus = 0, r = 0, max_cover_genus = 0, threads = 1;
        long long bfs_cap = orbiclass::kDefaultOrbitCap;
        bool json = false;
    } opt;

    auto add_json = [&opt](CLI::App* sub) {
        sub->add_flag("--json", opt.json, "emit JSON instead of text");
    };
    auto add_in = [&opt](CLI::App* sub) {
        sub->add_option("--in", opt.in, "input JSON (file path or inline document)")
            ->required();
    };
    auto add_ab = [&opt](CLI::App* sub) {
        sub->add_option("--a", opt.a, "first datum (file path or inline JSON)")->required();
        sub->add_option("--b", opt.b, "second datum (file path or inline JSON)")->required();
    };
    auto add_cap = [&opt](CLI::App* sub) {
        sub->add_option("--bfs-cap", opt.bfs_cap, "abort after this many visited states")
            ->check(CLI::PositiveNumber);
    };
    auto add_threads = [&opt](CLI::App* sub) {
        sub->add_option("--threads", opt.threads, "worker threads")->check(CLI::PositiveNumber);
    };

    CLI::App* validate = app.add_subcommand("validate", "check a datum and report violations");
    add_in(validate);
    add_json(validate);
    validate->callback([&] { rc = run_validate(opt.in, opt.json); });

    CLI::App* invariants =
        app.add_subcommand("invariants", "invariant tuple of one or more data");
    add_in(invariants);
    add_json(invariants);
    invariants->callback([&] { rc = run_invariants(opt.in, opt.json); });

    CLI::App* equivalent =
        app.add_subcommand("equivalent", "decide topological equivalence of two data");
    add_ab(equivalent);
    add_json(equivalent);
    equivalent->callback([&] { rc = run_equivalent(opt.a, opt.b, opt.json); });

    CLI::App* orbit = app.add_subcommand("orbit", "move orbit of a datum");
    add_in(orbit);
    add_json(orbit);
    add_cap(orbit);
    orbit->callback([&] { rc = run_orbit(opt.in, opt.json, opt.bfs_cap); });

    CLI::App* witness =
        app.add_subcommand("witness", "shortest move sequence between two data");
    add_ab(witness);
    add_json(witness);
    add_cap(witness);
    witness->callback([&] { rc = run_witness(opt.a, opt.b, opt.json, opt.bfs_cap); });

    CLI::App* census = app.add_subcommand("census", "enumerate equivalence classes");
    census->add_option("--two-q", opt.two_q, "order of the homeomorphism")->required();
    census->add_option("--genus", opt.genus, "crosscap number of the quotient")->required();
    CLI::Option* census_r = census->add_option("--r", opt.r, "number of cone points");
    CLI::Option* census_co =
        census->add_option("--cone-orders", opt.cone_orders, "cone order multiset, CSV");
    CLI::Option* census_mcg = census->add_option("--max-cover-genus", opt.max_cover_genus,
                                                 "bound on the covering surface genus");
    add_json(census);
    add_threads(census);
    census->callback([&] {
        orbiclass::CensusConstraint c;
        if (census_r->count()) c.r = opt.r;
        if (census_co->count()) c.cone_orders = parse_csv(opt.cone_orders);
        if (census_mcg->count()) c.max_cover_genus = opt.max_cover_genus;
        rc = run_census(opt.two_q, opt.genus, c, opt.json, opt.threads);
    });

    CLI::App* verify = app.add_subcommand(
        "verify", "cross-check invariant classes against move orbits (brute force)");
    verify->add_option("--two-q", opt.two_q, "order of the homeomorphism")->required();
    verify->add_option("--genus", opt.genus, "largest quotient genus to test")->required();
    verify->add_option("--r", opt.r, "largest cone point count to test")->required();
    add_json(verify);
    add_threads(verify);
    add_cap(verify);
    verify->callback(
        [&] { rc = run_verify(opt.two_q, opt.genus, opt.r, opt.json, opt.threads, opt.bfs_cap); });

    CLI::App* embeddable = app.add_subcommand("embeddable", "embeddability verdict");
    add_in(embeddable);
    add_json(embeddable);
    embeddable->callback([&] { rc = run_embeddable(opt.in, opt.json); });

    CLI::App* orientable_pair = app.add_subcommand(
        "orientable-pair", "pair invariant of an orientable quotient datum");
    add_in(orientable_pair);
    add_json(orientable_pair);
    orientable_pair->callback([&] { rc = run_orientable_pair(opt.in, opt.json); });

    CLI::App* cover = app.add_subcommand("cover-genus", "Euler characteristic and genus "
                                                        "of the covering surface");
    add_in(cover);
    add_json(cover);
    cover->callback([&] { rc = run_cover_genus(opt.in, opt.json); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const CliFailure& f) {
        return f.code;
    } catch (const orbiclass::OrbitCapExceeded& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return rc;
}
