#include "hh/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

namespace hh {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json poly_strings(const std::vector<Polynomial>& ps) {
    ordered_json a = ordered_json::array();
    for (const Polynomial& p : ps) a.push_back(p.to_string());
    return a;
}

ordered_json mono_strings(const Vars& v, const std::vector<Monomial>& ms) {
    ordered_json a = ordered_json::array();
    for (const Monomial& m : ms) a.push_back(Polynomial::from_term(v, m, Rational(1)).to_string());
    return a;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

ordered_json degree_json(const DegreeResult& dr, bool verbose) {
    ordered_json jd;
    jd["p"] = dr.p;
    jd["finite"] = dr.finite;
    jd["total"] = dr.total;
    jd["w_lo"] = dr.w_lo;
    jd["w_hi"] = dr.w_hi;
    std::map<long, std::size_t> h;
    for (const SliceSummary& s : dr.slices) h[s.w] = s.h;
    ordered_json hv = ordered_json::array();
    for (long w = dr.w_lo; w <= dr.w_hi; ++w) hv.push_back(h.count(w) ? h[w] : 0);
    jd["hilbert"] = std::move(hv);
    if (dr.expected) {
        ordered_json je;
        je["finite"] = dr.expected->finite;
        if (dr.expected->finite) je["total"] = dr.expected->total;
        jd["expected"] = std::move(je);
        jd["pass"] = dr.pass;
    } else {
        jd["expected"] = nullptr;
    }
    if (verbose) {
        ordered_json sl = ordered_json::array();
        for (const SliceSummary& s : dr.slices) {
            ordered_json js;
            js["w"] = s.w;
            js["dim"] = s.dim;
            js["rank_out"] = s.rank_out;
            js["rank_in"] = s.rank_in;
            js["h"] = s.h;
            sl.push_back(std::move(js));
        }
        jd["slices"] = std::move(sl);
    }
    return jd;
}

// Cell lookup for the dimension table: checks produced by the cohomology
// battery, keyed by name.
const Check* find_check(const VerificationOutcome& o, const std::string& name) {
    for (const Check& c : o.checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::string total_cell(const VerificationOutcome& o, std::initializer_list<const char*> names) {
    std::string cell;
    for (const char* n : names) {
        const Check* c = find_check(o, n);
        if (!c) continue;
        if (!cell.empty() && cell != c->computed) return cell + "/" + c->computed;
        cell = c->computed;
    }
    return cell.empty() ? "-" : cell;
}

std::string pad(std::string s, std::size_t width) {
    while (s.size() < width) s += ' ';
    return s;
}

}  // namespace

std::string gb_json(const GroebnerBasis& gb) {
    ordered_json j;
    j["order"] = gb.order.describe();
    j["elements"] = poly_strings(gb.elements);
    return dump(j);
}

std::string gb_text(const GroebnerBasis& gb) {
    std::string out;
    for (const Polynomial& p : gb.elements) out += p.to_string() + "\n";
    return out;
}

std::string nf_json(const DivisionResult& r, const std::vector<Polynomial>& divisors) {
    ordered_json j;
    j["remainder"] = r.remainder.to_string();
    ordered_json q = ordered_json::array();
    for (std::size_t i = 0; i < r.quotients.size(); ++i) {
        ordered_json e;
        e["divisor"] = divisors[i].to_string();
        e["quotient"] = r.quotients[i].to_string();
        q.push_back(std::move(e));
    }
    j["quotients"] = std::move(q);
    return dump(j);
}

std::string nf_text(const DivisionResult& r) { return r.remainder.to_string() + "\n"; }

std::string member_json(bool member) {
    ordered_json j;
    j["member"] = member;
    return dump(j);
}

std::string member_text(bool member) { return member ? "yes\n" : "no\n"; }

std::string basis_json(const QuotientBasis& qb) {
    ordered_json j;
    j["finite"] = qb.finite;
    j["dimension"] = qb.monomials.size();
    if (qb.weights) {
        j["weights"] = qb.weights->weights;
        j["bound"] = qb.bound;
    }
    j["monomials"] = mono_strings(qb.gb.vars, qb.monomials);
    return dump(j);
}

std::string basis_text(const QuotientBasis& qb) {
    std::string out;
    for (const Monomial& m : qb.monomials)
        out += Polynomial::from_term(qb.gb.vars, m, Rational(1)).to_string() + "\n";
    return out;
}

std::string milnor_json(const QuotientBasis& milnor) {
    ordered_json j;
    j["milnor"] = milnor.monomials.size();
    j["basis"] = mono_strings(milnor.gb.vars, milnor.monomials);
    return dump(j);
}

std::string milnor_text(const QuotientBasis& milnor) {
    return std::to_string(milnor.monomials.size()) + "\n";
}

std::string hilbert_json(const HilbertFunction& hf) {
    ordered_json j;
    j["weights"] = hf.weights.weights;
    j["f_weight"] = hf.weights.total;
    j["values"] = hf.values;
    return dump(j);
}

std::string hilbert_text(const HilbertFunction& hf) {
    std::string out;
    for (std::size_t w = 0; w < hf.values.size(); ++w)
        out += std::to_string(w) + ": " + std::to_string(hf.values[w]) + "\n";
    return out;
}

std::string cohomology_json(const CohomologyReport& rep, bool verbose) {
    ordered_json j;
    j["case"] = rep.case_id;
    j["f"] = rep.f.to_string();
    j["weights"] = rep.weights.weights;
    j["f_weight"] = rep.weights.total;
    j["weight_bound"] = rep.weight_bound;
    ordered_json ds = ordered_json::array();
    for (const DegreeResult& dr : rep.degrees) ds.push_back(degree_json(dr, verbose));
    j["degrees"] = std::move(ds);
    j["pass"] = rep.pass;
    return dump(j);
}

std::string cohomology_text(const CohomologyReport& rep, bool verbose) {
    std::ostringstream out;
    out << "case: " << (rep.case_id.empty() ? "-" : rep.case_id) << "\n";
    out << "f = " << rep.f.to_string() << "\n";
    out << "weights:";
    for (std::size_t i = 0; i < rep.weights.weights.size(); ++i)
        out << " " << rep.f.vars().name(i) << "=" << rep.weights.weights[i];
    out << ", f weight " << rep.weights.total << ", label bound " << rep.weight_bound << "\n";
    for (const DegreeResult& dr : rep.degrees) {
        out << "H^" << dr.p << ": ";
        if (dr.finite)
            out << "finite, dim " << dr.total;
        else
            out << "infinite (total " << dr.total << " over labels " << dr.w_lo << ".." << dr.w_hi
                << ")";
        if (dr.expected) {
            out << " [expected ";
            if (dr.expected->finite)
                out << "dim " << dr.expected->total;
            else
                out << "infinite";
            out << ": " << (dr.pass ? "pass" : "FAIL") << "]";
        }
        out << "\n";
        if (verbose)
            for (const SliceSummary& s : dr.slices)
                out << "  w=" << s.w << " dim=" << s.dim << " out=" << s.rank_out
                    << " in=" << s.rank_in << " h=" << s.h << "\n";
    }
    out << (rep.pass ? "pass" : "FAIL") << "\n";
    return out.str();
}

bool catalog_all_pass(const std::vector<VerificationOutcome>& outcomes) {
    return std::all_of(outcomes.begin(), outcomes.end(),
                       [](const VerificationOutcome& o) { return o.pass; });
}

std::string catalog_json(const std::vector<VerificationOutcome>& outcomes) {
    ordered_json j;
    ordered_json es = ordered_json::array();
    for (const VerificationOutcome& o : outcomes) {
        ordered_json e;
        e["id"] = o.id;
        e["param"] = o.param;
        ordered_json cs = ordered_json::array();
        for (const Check& c : o.checks) {
            ordered_json jc;
            jc["name"] = c.name;
            jc["expected"] = c.expected;
            jc["computed"] = c.computed;
            jc["pass"] = c.pass;
            cs.push_back(std::move(jc));
        }
        e["checks"] = std::move(cs);
        e["notes"] = o.notes;
        e["pass"] = o.pass;
        es.push_back(std::move(e));
    }
    j["entries"] = std::move(es);
    j["pass"] = catalog_all_pass(outcomes);
    return dump(j);
}

std::string catalog_csv(const std::vector<VerificationOutcome>& outcomes) {
    std::string out = "id,param,check,expected,computed,pass\n";
    for (const VerificationOutcome& o : outcomes)
        for (const Check& c : o.checks)
            out += csv_escape(o.id) + "," + std::to_string(o.param) + "," + csv_escape(c.name) +
                   "," + csv_escape(c.expected) + "," + csv_escape(c.computed) + "," +
                   (c.pass ? "true" : "false") + "\n";
    return out;
}

std::string catalog_text(const std::vector<VerificationOutcome>& outcomes) {
    std::ostringstream out;
    std::size_t checks = 0, failed = 0;
    for (const VerificationOutcome& o : outcomes) {
        const std::string head = o.id + "(" + std::to_string(o.param) + ")";
        for (const Check& c : o.checks) {
            ++checks;
            if (!c.pass) ++failed;
            out << (c.pass ? "[pass] " : "[FAIL] ") << head << " " << c.name;
            if (c.pass && c.expected == c.computed)
                out << " = " << c.computed;
            else
                out << ": expected " << c.expected << ", computed " << c.computed;
            out << "\n";
        }
        for (const std::string& n : o.notes) out << "[note] " << head << " " << n << "\n";
    }

    // Dimension table for the cases whose cohomology was scanned. H^2p and
    // H^2p+1 merge the even and odd stable columns; a slash marks the (never
    // expected) event that the two sampled degrees disagree.
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"case", "H^0", "H^1", "H^2", "H^2p", "H^2p+1"});
    for (const VerificationOutcome& o : outcomes) {
        if (!find_check(o, "H0-hilbert")) continue;
        const bool surface = find_check(o, "H2-infinite") != nullptr;
        std::vector<std::string> row;
        row.push_back(o.id + "(" + std::to_string(o.param) + ")");
        row.push_back("A");
        row.push_back("infinite");
        if (surface) {
            row.push_back("infinite");
            row.push_back(total_cell(o, {"H4-total"}));
        } else {
            row.push_back(total_cell(o, {"H2-total"}));
            row.push_back(total_cell(o, {"H2-total", "H4-total"}));
        }
        row.push_back(total_cell(o, {"H3-total", "H5-total"}));
        rows.push_back(std::move(row));
    }
    if (rows.size() > 1) {
        std::vector<std::size_t> width(rows[0].size(), 0);
        for (const auto& r : rows)
            for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
        out << "\n";
        for (const auto& r : rows) {
            for (std::size_t c = 0; c < r.size(); ++c)
                out << (c ? "  " : "") << pad(r[c], width[c]);
            out << "\n";
        }
    }

    out << "\n" << (checks - failed) << "/" << checks << " checks passed\n";
    out << (failed == 0 ? "pass" : "FAIL") << "\n";
    return out.str();
}

}  // namespace hh
