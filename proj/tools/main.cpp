// brieskorn -- exact-arithmetic workbench for Reeb orbit indices on Brieskorn
// manifolds, Morse-Bott spectral page bookkeeping over Z2, idempotent groups
// of finite graded F2-algebras and admissible exponent-tuple search.
//
// Every command is deterministic: identical configuration (including the
// contents of any referenced files) produces byte-identical output, which is
// what makes the checksummed result cache safe.
//
// Exit codes: 0 success / PASS, 2 input error, 3 certified negative verdict,
// 4 catalog gap.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "brieskorn/cache.hpp"
#include "brieskorn/exponent_tuple.hpp"
#include "brieskorn/f2_algebra.hpp"
#include "brieskorn/homology_catalog.hpp"
#include "brieskorn/index_calc.hpp"
#include "brieskorn/lattice.hpp"
#include "brieskorn/spectral_page.hpp"

namespace bk = brieskorn;

namespace {

enum class Format { pretty, tsv, records };

struct Report {
    std::string text;
    int status = 0;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw bk::DomainError("cannot open file " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Exponent order is irrelevant to every invariant here, so tuples are
// canonicalized (sorted) on entry; cache keys and reports agree.
bk::ExponentTuple parse_tuple(const std::string& text) { return bk::ExponentTuple::parse(text).sorted(); }

int parse_int(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(text, &used);
        if (used != text.size()) throw bk::DomainError("");
        return v;
    } catch (const bk::DomainError&) {
        throw bk::DomainError("bad " + what + " '" + text + "'");
    } catch (const std::exception&) {
        throw bk::DomainError("bad " + what + " '" + text + "'");
    }
}

std::string align(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        if (widths.size() < row.size()) widths.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
    }
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += "  ";
            out += row[i];
            if (i + 1 < row.size()) out += std::string(widths[i] - row[i].size(), ' ');
        }
        out += '\n';
    }
    return out;
}

std::string table(const std::vector<std::vector<std::string>>& rows, Format fmt) {
    if (fmt != Format::tsv) return align(rows);
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += '\t';
            out += row[i];
        }
        out += '\n';
    }
    return out;
}

Report spectrum_report(const bk::ExponentTuple& a, std::int64_t pmax, Format fmt) {
    Report rep;
    auto families = bk::morse_bott_families(a, pmax);
    if (fmt == Format::records) {
        std::ostringstream os;
        for (const auto& fam : families) {
            os << "p=" << fam.p << " subtuple=" << fam.subtuple.to_string() << " dim=" << fam.dim
               << " cz=" << bk::cz_brieskorn(a, fam.p).to_string()
               << " delta=" << bk::delta_shift(a, fam).to_string() << '\n';
        }
        rep.text = os.str();
        return rep;
    }
    std::vector<std::vector<std::string>> rows{{"p", "subtuple", "dim", "cz", "delta"}};
    for (const auto& fam : families) {
        rows.push_back({std::to_string(fam.p), fam.subtuple.to_string(), std::to_string(fam.dim),
                        bk::cz_brieskorn(a, fam.p).to_string(), bk::delta_shift(a, fam).to_string()});
    }
    if (fmt == Format::pretty) {
        rep.text = "tuple: " + a.to_string() + "\nperiods (units of pi/2) up to " + std::to_string(pmax) + "\n" +
                   table(rows, fmt);
    } else {
        rep.text = table(rows, fmt);
    }
    return rep;
}

Report adc_report(const bk::ExponentTuple& a, Format fmt) {
    Report rep;
    std::string m_str = "-", bound_str = "-", argmin_str = "-", reason;
    bool pass = false;
    try {
        auto m = bk::min_index(a);
        bk::HalfInt bound = bk::adc_bound(a);
        m_str = m.value.to_string();
        argmin_str = m.argmin.to_string();
        bound_str = bound.to_string();
        pass = bound > bk::HalfInt{0} && m.value >= bk::HalfInt::whole(2) && a.n() >= 3;
        if (!pass) reason = "requires bound > 0, m(a) >= 2 and n >= 3";
    } catch (const bk::UnboundedBelow&) {
        reason = "inverse_sum < 1 (f_a unbounded below)";
    }
    rep.status = pass ? 0 : 3;
    const char* verdict = pass ? "PASS" : "FAIL";
    if (fmt == Format::records) {
        std::ostringstream os;
        os << "tuple=" << a.to_string() << " n=" << a.n() << " m=" << m_str << " argmin=" << argmin_str
           << " bound=" << bound_str << " verdict=" << verdict;
        if (!reason.empty()) os << " reason=\"" << reason << "\"";
        os << '\n';
        rep.text = os.str();
    } else if (fmt == Format::tsv) {
        rep.text = table({{"tuple", "n", "m", "argmin", "bound", "verdict"},
                          {a.to_string(), std::to_string(a.n()), m_str, argmin_str, bound_str, verdict}},
                         fmt);
    } else {
        std::ostringstream os;
        os << "tuple:   " << a.to_string() << '\n'
           << "n:       " << a.n() << '\n'
           << "m(a):    " << m_str << (argmin_str == "-" ? "" : "   (attained at x = " + argmin_str + ")") << '\n'
           << "bound:   " << bound_str << "   (min{m(a) - 3/2, n - 5/2})" << '\n'
           << "verdict: " << verdict;
        if (!reason.empty()) os << "   [" << reason << "]";
        os << '\n';
        rep.text = os.str();
    }
    return rep;
}

Report sh_bounds_report(const bk::ExponentTuple& a, int d_lo, int d_hi, const bk::ZeroColumnSpec& zero_col,
                        const bk::HomologyCatalog& catalog, Format fmt) {
    Report rep;
    bk::E1Page page = bk::build_e1(a, bk::DegreeWindow{d_lo - 1, d_hi + 1}, zero_col, catalog);
    std::ostringstream os;
    std::vector<std::vector<std::string>> rows;
    if (fmt != Format::records) rows.push_back({"degree", "lower", "upper"});
    for (int d = d_lo; d <= d_hi; ++d) {
        auto b = bk::sh_bounds_on_page(page, d);
        if (fmt == Format::records)
            os << "degree=" << d << " lower=" << b.lower << " upper=" << b.upper << '\n';
        else
            rows.push_back({std::to_string(d), std::to_string(b.lower), std::to_string(b.upper)});
    }
    if (fmt != Format::records) os << table(rows, fmt);
    os << "page: window [" << page.window.lo << ", " << page.window.hi << "], p_max " << page.p_max
       << ", certified " << (page.completeness_certificate ? "yes" : "no") << '\n';
    if (!page.completeness_certificate)
        os << "warning: inverse sum <= 1, bounds are not certified complete\n";
    os << (fmt == Format::records ? bk::to_records(page) : bk::to_tsv(page));
    rep.text = os.str();
    return rep;
}

Report idempotents_report(const bk::GradedAlgebraF2& alg, int power, Format fmt) {
    Report rep;
    bk::validate(alg);
    std::ostringstream os;
    auto group = bk::idempotent_group(alg);
    if (fmt == Format::records) {
        os << "dim=" << alg.dim() << " I=" << group.size() << " index=" << group.size() / 2 << '\n';
    } else {
        os << "algebra: dim " << alg.dim() << ", unit " << alg.bits(alg.unit()) << '\n'
           << "|I|:     " << group.size() << '\n'
           << "index:   " << group.size() / 2 << '\n';
    }
    if (alg.dim() <= 8) {
        os << (fmt == Format::records ? "elements=" : "elements: ");
        for (std::size_t i = 0; i < group.elements.size(); ++i)
            os << (i ? " " : "") << alg.bits(group.elements[i]);
        os << '\n';
    }
    if (power > 1) {
        bk::GradedAlgebraF2 acc = alg;
        for (int i = 1; i <= power; ++i) {
            if (i > 1) acc = bk::product_ring(acc, alg);
            auto gi = bk::idempotent_group(acc);
            if (fmt == Format::records)
                os << "power=" << i << " I=" << gi.size() << " index=" << gi.size() / 2 << '\n';
            else
                os << "power " << i << ": |I| = " << gi.size() << ", index = " << gi.size() / 2 << '\n';
        }
    }
    rep.text = os.str();
    return rep;
}

Report search_report(int k, std::int64_t bound, bool min_k_mode, Format fmt) {
    Report rep;
    std::ostringstream os;
    std::vector<bk::ExponentTuple> found;
    if (min_k_mode) {
        auto kmin = bk::minimal_feasible_k(bound);
        if (!kmin) {
            os << (fmt == Format::pretty ? "no feasible k within bound\n" : "");
            rep.text = os.str();
            return rep;
        }
        os << (fmt == Format::records ? "k=" + std::to_string(*kmin) + "\n"
                                      : "minimal feasible k: " + std::to_string(*kmin) + "\n");
        found = bk::search_exponent_tuples(*kmin, bound);
    } else {
        found = bk::search_exponent_tuples(k, bound);
        if (found.empty() && fmt == Format::pretty) os << "no admissible tuples\n";
    }
    for (const auto& t : found) os << t.to_string() << '\n';
    rep.text = os.str();
    return rep;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic workbench for Brieskorn Reeb dynamics"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand

    std::string format_name = "pretty";
    std::string cache_dir;
    bool no_cache = false;
    app.add_option("--format", format_name, "output format")
        ->check(CLI::IsMember({"pretty", "tsv", "records"}))
        ->capture_default_str();
    app.add_option("--cache", cache_dir, "result cache directory")->envname("BRIESKORN_CACHE_DIR");
    app.add_flag("--no-cache", no_cache, "disable the result cache");

    std::string tuple_text;
    std::int64_t pmax = 1;
    auto* spectrum = app.add_subcommand("spectrum", "closed Reeb orbit families up to a period bound");
    spectrum->add_option("--tuple", tuple_text, "exponent tuple, e.g. 2,2,2,18x9")->required();
    spectrum->add_option("--pmax", pmax, "largest period (units of pi/2)")->required();

    auto* adc = app.add_subcommand("adc", "minimal index m(a) and the strong ADC certificate");
    adc->add_option("--tuple", tuple_text, "exponent tuple")->required();

    int degree = 0;
    std::string window_text, zero_column_file;
    std::vector<std::string> catalog_files;
    auto* shb = app.add_subcommand("sh-bounds", "degree-wise bounds on dim SH^0 from the E1 page");
    shb->add_option("--tuple", tuple_text, "exponent tuple")->required();
    auto* degree_opt = shb->add_option("--degree", degree, "single total degree");
    auto* window_opt = shb->add_option("--window", window_text, "degree range lo:hi");
    degree_opt->excludes(window_opt);
    shb->add_option("--zero-column", zero_column_file, "p = 0 column file");
    shb->add_option("--catalog", catalog_files, "homology catalog file (repeatable)");

    std::string algebra_file;
    int power = 1;
    auto* idem = app.add_subcommand("idempotents", "idempotent group of a finite graded F2-algebra");
    idem->add_option("--algebra", algebra_file, "algebra description file")->required();
    idem->add_option("--power", power, "also report the i-fold products up to this power")
        ->check(CLI::Range(1, 8));

    int k = 0;
    std::int64_t bound = 0;
    bool min_k_mode = false;
    auto* search = app.add_subcommand("search", "admissible exponent tuples (2,2,2,p_1..p_k)");
    auto* k_opt = search->add_option("--k", k, "tail length");
    search->add_option("--bound", bound, "largest allowed tail exponent")->required();
    auto* min_k_opt = search->add_flag("--min-k", min_k_mode, "scan k upward until a tuple exists");
    k_opt->excludes(min_k_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Format fmt = format_name == "tsv" ? Format::tsv : format_name == "records" ? Format::records : Format::pretty;
        std::string key;
        std::function<Report()> compute;

        if (spectrum->parsed()) {
            bk::ExponentTuple a = parse_tuple(tuple_text);
            if (pmax < 1) throw bk::DomainError("--pmax must be >= 1");
            key = "spectrum|tuple=" + a.to_string() + "|pmax=" + std::to_string(pmax);
            compute = [=] { return spectrum_report(a, pmax, fmt); };
        } else if (adc->parsed()) {
            bk::ExponentTuple a = parse_tuple(tuple_text);
            key = "adc|tuple=" + a.to_string();
            compute = [=] { return adc_report(a, fmt); };
        } else if (shb->parsed()) {
            bk::ExponentTuple a = parse_tuple(tuple_text);
            int d_lo, d_hi;
            if (window_opt->count()) {
                auto colon = window_text.find(':');
                if (colon == std::string::npos) throw bk::DomainError("--window expects lo:hi");
                d_lo = parse_int(window_text.substr(0, colon), "window bound");
                d_hi = parse_int(window_text.substr(colon + 1), "window bound");
                if (d_lo > d_hi) throw bk::DomainError("--window expects lo <= hi");
            } else if (degree_opt->count()) {
                d_lo = d_hi = degree;
            } else {
                throw bk::DomainError("sh-bounds needs --degree or --window");
            }
            bk::ZeroColumnSpec zero_col;
            key = "sh-bounds|tuple=" + a.to_string() + "|window=" + std::to_string(d_lo) + ":" +
                  std::to_string(d_hi);
            if (!zero_column_file.empty()) {
                std::string content = read_file(zero_column_file);
                std::istringstream in(content);
                zero_col = bk::parse_zero_column(in, zero_column_file);
                key += "|zero=" + bk::hex64(bk::fnv1a64(content));
            }
            bk::HomologyCatalog catalog;
            for (const auto& f : catalog_files) {
                std::string content = read_file(f);
                std::istringstream in(content);
                catalog.load(in, f);
                key += "|catalog=" + bk::hex64(bk::fnv1a64(content));
            }
            catalog.freeze();
            compute = [=, zero_col = std::move(zero_col), catalog = std::move(catalog)] {
                return sh_bounds_report(a, d_lo, d_hi, zero_col, catalog, fmt);
            };
        } else if (idem->parsed()) {
            std::string content = read_file(algebra_file);
            std::istringstream in(content);
            bk::GradedAlgebraF2 alg = bk::parse_algebra(in, algebra_file);
            key = "idempotents|algebra=" + bk::hex64(bk::fnv1a64(content)) + "|power=" + std::to_string(power);
            compute = [=, alg = std::move(alg)] { return idempotents_report(alg, power, fmt); };
        } else {
            if (!min_k_mode && k_opt->count() == 0) throw bk::DomainError("search needs --k or --min-k");
            if (!min_k_mode && k < 1) throw bk::DomainError("--k must be >= 1");
            if (bound < 1) throw bk::DomainError("--bound must be >= 1");
            key = "search|" + (min_k_mode ? std::string("min-k") : "k=" + std::to_string(k)) +
                  "|bound=" + std::to_string(bound);
            compute = [=] { return search_report(k, bound, min_k_mode, fmt); };
        }

        key += "|format=" + format_name + "|v" + std::string(bk::kCacheVersion);

        if (!cache_dir.empty() && !no_cache) {
            bk::ResultCache cache{std::filesystem::path(cache_dir)};
            if (auto hit = cache.fetch(key)) {
                std::cout << hit->payload;
                return hit->status;
            }
            Report rep = compute();
            cache.store(key, bk::CacheEntry{rep.text, rep.status});
            std::cout << rep.text;
            return rep.status;
        }
        Report rep = compute();
        std::cout << rep.text;
        return rep.status;
    } catch (const bk::UnknownHomology& e) {
        std::cerr << "error: " << e.what() << "\nadd a line \"" << e.key
                  << ": d0 d1 ...\" to a --catalog file to extend the registry\n";
        return 4;
    } catch (const bk::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const bk::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const bk::OverflowError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const bk::DimensionTooLarge& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const bk::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
