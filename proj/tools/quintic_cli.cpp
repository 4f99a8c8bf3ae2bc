// Command-line front end: registered identity verification, pentamidiation
// matrix dumps, congruence scans, and q-series serialization.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "quintic/eisenstein.hpp"
#include "quintic/partitions.hpp"
#include "quintic/pentops.hpp"
#include "quintic/products.hpp"
#include "quintic/quintic_theta.hpp"
#include "quintic/report.hpp"

#include "reference_tables.hpp"

namespace {

using namespace quintic;
using nlohmann::json;

constexpr long kDefaultOrder = 100;

long env_default_order() {
    if (const char* s = std::getenv("QUINTIC_DEFAULT_ORDER")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end && *end == '\0' && v >= 1) return v;
    }
    return kDefaultOrder;
}

/// Writes to --out FILE when given, stdout otherwise.
int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return 0;
    }
    std::ofstream os(out_path);
    if (!os) {
        std::cerr << "cannot open output file: " << out_path << "\n";
        return 2;
    }
    os << text << "\n";
    return 0;
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(std::vector<std::string> names, std::optional<long> order, bool as_json, long jobs,
               const std::string& out_path) {
    std::vector<RegistryEntry> entries;
    if (names.size() == 1 && names[0] == "all") {
        entries = registry_list();
    } else {
        for (const auto& n : names) {
            if (!registry_has(n)) {
                std::cerr << "unknown identity name: " << n << "\n";
                return 2;
            }
            for (const auto& e : registry_list())
                if (e.name == n) entries.push_back(e);
        }
    }
    std::sort(entries.begin(), entries.end(),
              [](const RegistryEntry& a, const RegistryEntry& b) { return a.name < b.name; });

    std::vector<IdentityReport> reports(entries.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i; (i = next.fetch_add(1)) < entries.size();) {
            Rational M = order ? Rational(*order) : entries[i].default_order;
            reports[i] = verify_registry(entries[i].name, M);
        }
    };
    long nthreads = std::max(1L, std::min(jobs, static_cast<long>(entries.size())));
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (long t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    bool all_pass = true;
    std::ostringstream os;
    if (as_json) {
        os << "[";
        for (size_t i = 0; i < reports.size(); ++i)
            os << (i ? "," : "") << reports[i].to_json();
        os << "]";
    }
    for (size_t i = 0; i < reports.size(); ++i) {
        if (!as_json) os << reports[i].str() << (i + 1 < reports.size() ? "\n" : "");
        all_pass = all_pass && reports[i].pass;
    }
    int rc = emit(os.str(), out_path);
    if (rc) return rc;
    return all_pass ? 0 : 1;
}

// ---- pentarray ------------------------------------------------------------

int cmd_pentarray(long d, const std::string& which, bool check_paper, bool as_json,
                  const std::string& out_path) {
    if (d < 1 || d > 12) {
        std::cerr << "degree out of range (1..12): " << d << "\n";
        return 2;
    }
    IntMatrix m = (which == "A") ? hecke_matrix(d) : pent_array(d);

    std::optional<IntMatrix> ref =
        (which == "A") ? tables::hecke_reference(d) : tables::pent_reference(d);

    std::ostringstream os;
    if (as_json) {
        json j;
        j["schema"] = 1;
        j["which"] = which;
        j["d"] = d;
        json rows = json::array();
        for (long r = 0; r < m.rows; ++r) {
            json row = json::array();
            for (long c = 0; c < m.cols; ++c) row.push_back(m.at(r, c).get_str());
            rows.push_back(row);
        }
        j["rows"] = rows;
        if (check_paper && ref) j["reference"] = (m == *ref) ? "MATCH" : "MISMATCH";
        os << j.dump();
    } else {
        os << m.str();
        if (check_paper && ref) os << ((m == *ref) ? "MATCH" : "MISMATCH");
    }
    if (check_paper && !ref) {
        std::cerr << "no embedded reference table for " << which << "_" << d << "\n";
        return 2;
    }
    int rc = emit(os.str(), out_path);
    if (rc) return rc;
    if (check_paper && ref && !(m == *ref)) return 1;
    return 0;
}

// ---- scan -----------------------------------------------------------------

int cmd_scan(long k, long modulus, long a, long b, long n_max, bool conjecture, bool as_json,
             const std::string& out_path) {
    CongruenceCertificate cert;
    try {
        cert = congruence_scan(k, Int(modulus), a, b, n_max, conjecture);
    } catch (const std::exception& e) {
        std::cerr << "malformed scan request: " << e.what() << "\n";
        return 2;
    }
    int rc = emit(as_json ? cert.to_json() : cert.str(), out_path);
    if (rc) return rc;
    return cert.pass ? 0 : 1;
}

// ---- dump -----------------------------------------------------------------

std::optional<QSeries> build_series(const std::string& id, const Rational& M) {
    if (id == "A") return theta_A(M);
    if (id == "B") return theta_B(M);
    if (id == "C") return theta_C(M);
    if (id == "D") return theta_D(M);
    if (id == "G") return rogers_ramanujan(RR::G, SeriesForm::primary, M);
    if (id == "H") return rogers_ramanujan(RR::H, SeriesForm::primary, M);
    if (id == "R") return rr_continued_fraction(M);
    if (id == "E2") return eisenstein_level1(2, M);
    if (id == "E4") return eisenstein_level1(4, M);
    if (id == "E6") return eisenstein_level1(6, M);
    if (id == "delta") {
        // q (q;q)^24
        QSeries eta24 = eta_power(24, 1, 1, M);
        long terms = std::max(1L, mpz_class(M.get_num() / M.get_den()).get_si()) + 1;
        return eta24 * QSeries::monomial(FieldElement(1), 1, 1, terms);
    }
    static const std::regex t_re("^t([1-6])$");
    static const std::regex ek_re("^([EL])([1-9])\\.chi([1-4])$");
    std::smatch sm;
    if (std::regex_match(id, sm, t_re)) return t_series(std::stoi(sm[1].str()), M);
    if (std::regex_match(id, sm, ek_re)) {
        int kk = std::stoi(sm[2].str());
        int chi = std::stoi(sm[3].str());
        try {
            if (sm[1].str() == "E") return eisenstein_level5(kk, chi, M);
            return lambert_L(kk, chi, M);
        } catch (const std::exception&) {
            return std::nullopt;  // parity mismatch etc.
        }
    }
    return std::nullopt;
}

int cmd_dump(const std::string& id, long order, const std::string& out_path) {
    std::optional<QSeries> f;
    try {
        f = build_series(id, Rational(order));
    } catch (const std::exception& e) {
        std::cerr << "cannot build series " << id << ": " << e.what() << "\n";
        return 2;
    }
    if (!f) {
        std::cerr << "unknown series id: " << id << "\n";
        return 2;
    }
    json j;
    j["schema"] = 1;
    j["id"] = id;
    j["grid"] = f->grid();
    {
        Rational v(f->val_num(), f->grid());
        v.canonicalize();
        j["valuation"] = v.get_str();
    }
    j["known_order"] = f->known_order().get_str();
    json terms = json::array();
    for (long k = 0; k < f->size(); ++k) {
        const FieldElement& c = f->at(k);
        if (c.is_zero()) continue;
        Rational e(f->val_num() + k, f->grid());
        e.canonicalize();
        terms.push_back({{"exponent", e.get_str()}, {"coeff", c.str()}});
    }
    j["terms"] = terms;
    return emit(j.dump(), out_path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification toolkit for the quintic theta functions"};
    app.require_subcommand(1);

    long default_order = env_default_order();

    // verify
    auto* v = app.add_subcommand("verify", "run registered identity checks (names or 'all')");
    std::vector<std::string> v_names;
    long v_order = -1, v_jobs = 1;
    bool v_json = false;
    std::string v_out;
    v->add_option("names", v_names, "identity names, or 'all'")->required();
    v->add_option("--order", v_order, "truncation order (default: registry entry default)");
    v->add_flag("--json", v_json, "emit a JSON array of reports");
    v->add_option("--jobs", v_jobs, "worker threads")->check(CLI::PositiveNumber);
    v->add_option("--out", v_out, "write output to file");

    // pentarray
    auto* p = app.add_subcommand("pentarray", "print a pentamidiation/multisection matrix");
    long p_d = 0;
    std::string p_which = "B", p_out;
    bool p_check = false, p_json = false;
    p->add_option("d", p_d, "degree (1..12)")->required();
    p->add_option("--which", p_which, "B (full array) or A (multisection rows)")
        ->check(CLI::IsMember({"A", "B"}));
    p->add_flag("--check-paper", p_check, "diff against the embedded reference table");
    p->add_flag("--json", p_json, "emit JSON");
    p->add_option("--out", p_out, "write output to file");

    // scan
    auto* s = app.add_subcommand("scan", "residue scan of p_k(a n + b) mod M");
    long s_k = 1, s_M = 5, s_a = 5, s_b = 4, s_nmax = 100;
    bool s_conj = false, s_json = false;
    std::string s_out;
    s->add_option("-k", s_k, "eta-power family index k (p_k coefficients)")->required();
    s->add_option("-M", s_M, "modulus")->required();
    s->add_option("-a", s_a, "progression step")->required();
    s->add_option("-b", s_b, "progression offset")->required();
    s->add_option("--nmax", s_nmax, "scan n = 0..nmax")->required();
    s->add_flag("--conjecture", s_conj, "label the certificate conjecture-support");
    s->add_flag("--json", s_json, "emit JSON");
    s->add_option("--out", s_out, "write output to file");

    // dump
    auto* d = app.add_subcommand("dump", "serialize a named q-series as JSON");
    std::string d_id, d_out;
    long d_order = -1;
    d->add_option("id", d_id,
                  "A B C D G H R E2 E4 E6 delta t1..t6 E<k>.chi<j> L<k>.chi<j>")
        ->required();
    d->add_option("--order", d_order, "truncation order");
    d->add_option("--out", d_out, "write output to file");

    CLI11_PARSE(app, argc, argv);

    if (v->parsed()) {
        std::optional<long> order;
        if (v_order >= 1) order = v_order;
        else if (v->count("--order")) {
            std::cerr << "order must be >= 1\n";
            return 2;
        } else if (std::getenv("QUINTIC_DEFAULT_ORDER")) {
            order = default_order;
        }
        return cmd_verify(v_names, order, v_json, v_jobs, v_out);
    }
    if (p->parsed()) return cmd_pentarray(p_d, p_which, p_check, p_json, p_out);
    if (s->parsed()) return cmd_scan(s_k, s_M, s_a, s_b, s_nmax, s_conj, s_json, s_out);
    if (d->parsed())
        return cmd_dump(d_id, d_order >= 1 ? d_order : default_order, d_out);
    return 2;
}
