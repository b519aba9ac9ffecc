// Command-line harness: exact counts, exponential sums, lattice checks,
// resultants, parameter sweeps and invariant suites.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "recip/counting.hpp"
#include "recip/expsums.hpp"
#include "recip/lattice.hpp"
#include "recip/oracles.hpp"
#include "recip/polyalg.hpp"
#include "recip/report.hpp"
#include "recip/sweep.hpp"

using namespace recip;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

Interval parse_interval(const std::string& s, const PrimeModulus& p) {
    auto parts = split(s, ':');
    if (parts.size() != 2) throw ConfigError("interval must be a:N, got '" + s + "'");
    return Interval(std::stoull(parts[0]), std::stoull(parts[1]), p);
}

mpq_class parse_rational(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ConfigError("bad rational '" + s + "'");
    q.canonicalize();
    return q;
}

// descending coefficients "1,0,-1" -> Z^2 - 1
IntPoly parse_poly(const std::string& s) {
    auto parts = split(s, ',');
    std::vector<mpz_class> asc;
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) asc.push_back(mpz_class(*it));
    return IntPoly(std::move(asc));
}

Backend parse_backend(const std::string& s) {
    if (s == "dense") return Backend::Dense;
    if (s == "sparse") return Backend::Sparse;
    if (s == "auto") return Backend::Auto;
    throw ConfigError("backend must be dense, sparse or auto");
}

std::string complex_str(const ComplexSum& s) {
    std::ostringstream os;
    os << format_double(s.re) << (s.im < 0 ? " - " : " + ") << format_double(std::abs(s.im))
       << "i  |.|=" << format_double(s.modulus()) << "  terms=" << s.terms;
    return os.str();
}

std::string timestamp_now() {
    std::time_t t = std::time(nullptr);
    char buf[64];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

void emit_records(const std::vector<ResultRecord>& records, const std::string& format,
                  const std::string& out_path) {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw ConfigError("cannot open output file " + out_path);
        os = &file;
    }
    if (format == "json")
        write_json(*os, records, timestamp_now());
    else
        write_csv(*os, records, timestamp_now());
}

struct CommonOpts {
    u64 p = 0;
    std::string interval = "0:1";
    std::string interval2;
    int k = 2;
    int n = 1;
    std::string backend = "auto";
    std::string format = "csv";
    std::string out;
    u64 seed = 1;
    int threads = 1;
};

int run_count(const std::string& op, const CommonOpts& c, u64 lambda, u64 bigN, int r,
              const std::string& sigma, i64 a0, i64 b0, i64 u0, i64 v0) {
    if (op == "rational-j2k") {
        std::cout << "J_" << 2 * c.k << " over Q, N=" << bigN << ": "
                  << rational_J2k(bigN, c.k).get_str() << "\n";
        return 0;
    }
    if (op == "shifted") {
        auto q = parse_rational(sigma);
        RationalPair sp(q.get_num().get_si(), q.get_den().get_si());
        std::cout << "T_" << r << "(sigma=" << sigma << ", N=" << bigN
                  << "): " << rational_shifted_count(sp, bigN, r).get_str() << "\n";
        return 0;
    }
    if (op == "dioph") {
        std::cout << "J(a0=" << a0 << ",b0=" << b0 << ",u0=" << u0 << ",v0=" << v0
                  << ",N=" << bigN << "): " << dioph_3I_count(a0, b0, u0, v0, bigN).get_str()
                  << "\n";
        return 0;
    }
    PrimeModulus p(c.p);
    Backend backend = parse_backend(c.backend);
    if (op == "j2k") {
        Interval I = parse_interval(c.interval, p);
        auto rep = count_J2k(I, c.k, p, backend, c.threads);
        std::cout << "J_" << 2 * c.k << " = " << rep.J.get_str()
                  << "  predicted_exponent=" << rep.predicted_exponent
                  << "  measured_exponent=" << format_double(rep.measured_exponent)
                  << "  seconds=" << format_double(rep.wall_time) << "\n";
    } else if (op == "j2k-prime") {
        auto rep = count_J2k_prime(bigN, c.k, p, backend);
        std::cout << "J_" << 2 * c.k << " (primes<=N) = " << rep.J.get_str() << "\n";
    } else if (op == "ternary") {
        Interval I = parse_interval(c.interval, p);
        auto t = ternary_count(I, lambda, p);
        std::cout << "count=" << t.count << " lambda_excluded=" << (t.lambda_excluded ? 1 : 0)
                  << "\n";
    } else if (op == "sumset") {
        Interval I = parse_interval(c.interval, p);
        std::cout << "|" << c.k << "(I^-1)| = " << sumset_size(I, c.k, p, backend) << "\n";
    } else if (op == "hyperbola") {
        Interval I = parse_interval(c.interval, p);
        std::cout << "count=" << hyperbola_count(I, lambda, p) << "\n";
    } else if (op == "invpair") {
        Interval I = parse_interval(c.interval, p);
        std::cout << "count=" << inverse_pair_count(I, lambda, p) << "\n";
    } else if (op == "tripleprod") {
        Interval I = parse_interval(c.interval, p);
        std::cout << "count=" << triple_product_count(I, lambda, p) << "\n";
    } else if (op == "multenergy") {
        Interval I = parse_interval(c.interval, p);
        Interval I2 = parse_interval(c.interval2.empty() ? c.interval : c.interval2, p);
        std::cout << "E(I1,I2) = " << mult_energy(I, I2, p).get_str() << "\n";
    } else {
        throw ConfigError("unknown count op '" + op + "'");
    }
    return 0;
}

int run_expsum(const std::string& op, const CommonOpts& c, u64 a, u64 b, u64 bigN, int r,
               double xi, u64 n1, u64 n2, int k1, int k2, double ratio, u64 samples) {
    if (op == "archimedean") {
        std::cout << complex_str(archimedean_bilinear(xi, n1, n2)) << "\n";
        return 0;
    }
    if (op == "gamma") {
        std::cout << "gamma = " << format_double(archimedean_gamma(xi, n1, n2, k1, k2)) << "\n";
        return 0;
    }
    if (op == "choose-k") {
        std::cout << "k = " << choose_archimedean_k(ratio, n1) << "\n";
        return 0;
    }
    PrimeModulus p(c.p);
    if (op == "linear") {
        Interval I = parse_interval(c.interval, p);
        std::cout << complex_str(linear_incomplete(a, I, p)) << "\n";
    } else if (op == "max-linear") {
        Interval I = parse_interval(c.interval, p);
        auto res = max_linear_over_a(I, p);
        std::cout << "a*=" << res.a_star << " |S|=" << format_double(res.magnitude) << "\n";
    } else if (op == "max-linear-sampled") {
        Interval I = parse_interval(c.interval, p);
        auto res = max_linear_sampled(I, p, samples, c.seed);
        std::cout << "a*=" << res.a_star << " |S|=" << format_double(res.magnitude)
                  << " (sampled " << samples << ")\n";
    } else if (op == "bilinear") {
        Interval I1 = parse_interval(c.interval, p);
        Interval I2 = parse_interval(c.interval2.empty() ? c.interval : c.interval2, p);
        auto s = bilinear(a, I1, I2, CoeffSeq::ones(I1.length()), CoeffSeq::ones(I2.length()), p);
        std::cout << complex_str(s) << "\n";
    } else if (op == "multilinear") {
        std::vector<Interval> is;
        std::vector<CoeffSeq> cs;
        for (const auto& part : split(c.interval, ';')) {
            is.push_back(parse_interval(part, p));
            cs.push_back(CoeffSeq::ones(is.back().length()));
        }
        std::cout << complex_str(multilinear(a, is, cs, p)) << "\n";
    } else if (op == "prime-power") {
        std::cout << complex_str(prime_sum_power_r(a, bigN, r, p)) << "\n";
    } else if (op == "complete") {
        std::cout << complex_str(complete_kloosterman(a, b, p)) << "\n";
    } else {
        throw ConfigError("unknown expsum op '" + op + "'");
    }
    return 0;
}

int run_lattice(const std::string& op, const CommonOpts& c, u64 lambda, u64 c1, u64 c2,
                const std::string& box_str, u64 bigN) {
    PrimeModulus p(c.p);
    auto parse_box = [&] {
        std::vector<mpq_class> b;
        for (const auto& part : split(box_str, ',')) b.push_back(parse_rational(part));
        return Box(std::move(b));
    };
    auto print_minima = [](const std::vector<std::optional<mpq_class>>& m) {
        std::ostringstream os;
        for (size_t i = 0; i < m.size(); ++i) {
            if (i) os << ", ";
            if (m[i])
                os << m[i]->get_str();
            else
                os << "inf";
        }
        return os.str();
    };
    if (op == "theorem5") {
        auto setup = theorem5_lattice(lambda, bigN, c.k, p);
        std::cout << "box=(" << setup.box.bounds[0].get_str() << ", "
                  << setup.box.bounds[1].get_str() << ") minima=[" << print_minima(setup.minima)
                  << "] class=" << (setup.omega_prime ? "Omega'" : "Omega''") << "\n";
        return 0;
    }
    Box D = parse_box();
    LatticeSpec L = static_cast<int>(D.dim()) == 2 ? LatticeSpec::hyperbola2d(lambda, p)
                                                   : LatticeSpec::planar3d(c1, c2, p);
    if (op == "points") {
        auto res = box_points(L, D);
        std::cout << "count=" << res.count << "\n";
        for (const auto& pt : res.points) {
            std::cout << "(";
            for (size_t i = 0; i < pt.size(); ++i) std::cout << (i ? "," : "") << pt[i].get_str();
            std::cout << ")\n";
        }
    } else if (op == "minima") {
        std::cout << "[" << print_minima(successive_minima(L, D)) << "]\n";
    } else if (op == "minkowski") {
        auto rep = minkowski_check(L, D);
        std::cout << "points=" << rep.lattice_points << " minima=[" << print_minima(rep.minima)
                  << "] lemma3_rhs=" << rep.lemma3_rhs.get_str()
                  << " lemma3=" << (rep.lemma3_pass ? "pass" : "FAIL")
                  << " cor2_lhs=" << rep.cor2_lhs.get_str()
                  << " cor2_rhs=" << rep.cor2_rhs.get_str()
                  << " cor2=" << (rep.cor2_pass ? "pass" : "FAIL") << "\n";
        return rep.pass ? 0 : 1;
    } else {
        throw ConfigError("unknown lattice op '" + op + "'");
    }
    return 0;
}

int run_resultant(const std::string& op, const std::string& P_str, const std::string& Q_str,
                  const std::string& tuple, u64 bigN, const std::string& sigma,
                  const std::string& theta, i64 A, const std::string& vals, i64 B, u64 bound) {
    if (op == "res") {
        std::cout << "Res = " << sylvester_resultant(parse_poly(P_str), parse_poly(Q_str)).get_str()
                  << "\n";
    } else if (op == "solution-poly") {
        std::vector<mpz_class> xs;
        for (const auto& part : split(tuple, ',')) xs.push_back(mpz_class(part));
        auto poly = build_solution_poly(xs);
        std::cout << "degree=" << poly.degree() << " coeffs(asc)=";
        for (size_t i = 0; i < poly.coeffs().size(); ++i)
            std::cout << (i ? "," : "") << poly.coeffs()[i].get_str();
        std::cout << "\n";
    } else if (op == "bound-check") {
        auto rep = resultant_bound_check(parse_poly(P_str), parse_poly(Q_str), bigN,
                                         parse_rational(sigma), parse_rational(theta),
                                         mpz_class(static_cast<long>(A)));
        std::cout << "|Res|=" << mpz_class(abs(rep.resultant)).get_str() << " exponent=" << rep.exponent
                  << " bound=" << format_double(rep.bound) << " ratio=" << format_double(rep.ratio)
                  << "\n";
    } else if (op == "identity") {
        auto parts = split(vals, ',');
        if (parts.size() != 7) throw ConfigError("--vals needs x,y,z,a1,a2,b1,b2");
        std::vector<mpq_class> v;
        for (const auto& s : parts) v.push_back(parse_rational(s));
        auto res = identity_check(v[0], v[1], v[2], v[3], v[4], v[5], v[6]);
        std::cout << (res.holds ? "holds" : "VIOLATED") << " lhs=" << res.lhs
                  << " rhs=" << res.rhs << "\n";
        return res.holds ? 0 : 1;
    } else if (op == "hyperbola-div") {
        auto sols = hyperbola_divisor_solutions(A, B, bound);
        std::cout << sols.size() << " solutions\n";
        for (auto [x, y] : sols) std::cout << "(" << x << "," << y << ")\n";
    } else {
        throw ConfigError("unknown resultant op '" + op + "'");
    }
    return 0;
}

template <typename T>
std::vector<T> parse_list(const std::string& s, T (*conv)(const std::string&)) {
    std::vector<T> out;
    for (const auto& part : split(s, ',')) out.push_back(conv(part));
    return out;
}

u64 to_u64(const std::string& s) { return std::stoull(s); }
int to_int(const std::string& s) { return std::stoi(s); }
double to_dbl(const std::string& s) { return std::stod(s); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact counting and exponential-sum measurements on inverse intervals"};
    app.require_subcommand(1);

    CommonOpts c;
    std::string op;
    u64 lambda = 1, bigN = 10, a = 1, b = 0, n1 = 10, n2 = 10, bound = 100, samples = 32;
    u64 c1 = 0, c2 = 0, bt_x = 1000000;
    int r = 1, k1 = 1, k2 = 1;
    double xi = 0.0, ratio = 2.0;
    i64 a0 = 0, b0 = 1, u0 = 1, v0 = 1, A = 1, B = 1;
    std::string sigma = "0", theta = "0", P_str = "1,0", Q_str = "1,0", tuple = "1,2,3,4";
    std::string vals = "1,2,3,1,1,0,5", box_str = "1,1";
    std::string p_list, N_list, N2_list, k_list, k2_list, n_list, a_list, xi_list, theta_list;
    std::string suite = "all", theorem = "T1", t4_c = "1/4";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--p", c.p, "prime modulus");
        sub->add_option("--interval", c.interval, "interval a:N ({a+1..a+N} mod p)");
        sub->add_option("--interval2", c.interval2, "second interval a:N");
        sub->add_option("--k", c.k, "fold count k");
        sub->add_option("--n", c.n, "factor count n");
        sub->add_option("--backend", c.backend, "dense|sparse|auto");
        sub->add_option("--format", c.format, "csv|json");
        sub->add_option("--out", c.out, "output path (default stdout)");
        sub->add_option("--seed", c.seed, "RNG seed");
        sub->add_option("--threads", c.threads, "worker threads");
    };

    auto* count = app.add_subcommand("count", "exact solution counts");
    add_common(count);
    count->add_option("--op", op, "j2k|j2k-prime|ternary|sumset|hyperbola|invpair|tripleprod|"
                                  "multenergy|rational-j2k|shifted|dioph")->required();
    count->add_option("--lambda", lambda, "target residue");
    count->add_option("--N", bigN, "range bound N");
    count->add_option("--r", r, "fold count r (shifted)");
    count->add_option("--sigma", sigma, "rational shift u/v");
    count->add_option("--a0", a0, "dioph a0");
    count->add_option("--b0", b0, "dioph b0");
    count->add_option("--u0", u0, "dioph u0");
    count->add_option("--v0", v0, "dioph v0");

    auto* expsum = app.add_subcommand("expsum", "exponential sum evaluation");
    add_common(expsum);
    expsum->add_option("--op", op, "linear|max-linear|max-linear-sampled|bilinear|multilinear|"
                                   "prime-power|complete|archimedean|gamma|choose-k")->required();
    expsum->add_option("--a", a, "coefficient a");
    expsum->add_option("--b", b, "coefficient b");
    expsum->add_option("--N", bigN, "range bound N");
    expsum->add_option("--r", r, "inverse power r");
    expsum->add_option("--xi", xi, "archimedean frequency");
    expsum->add_option("--n1", n1, "dyadic N1");
    expsum->add_option("--n2", n2, "dyadic N2");
    expsum->add_option("--k1", k1, "holder exponent k1");
    expsum->add_option("--k2", k2, "holder exponent k2");
    expsum->add_option("--ratio", ratio, "|xi|/(N1 N2)");
    expsum->add_option("--samples", samples, "sampled a count");

    auto* lattice = app.add_subcommand("lattice", "congruence lattice tools");
    add_common(lattice);
    lattice->add_option("--op", op, "points|minima|minkowski|theorem5")->required();
    lattice->add_option("--lambda", lambda, "2D congruence coefficient");
    lattice->add_option("--c1", c1, "3D coefficient c1");
    lattice->add_option("--c2", c2, "3D coefficient c2");
    lattice->add_option("--box", box_str, "per-coordinate bounds B1,B2[,B3]");
    lattice->add_option("--N", bigN, "theorem-5 N");

    auto* resultant = app.add_subcommand("resultant", "integer polynomial algebra");
    resultant->add_option("--op", op, "res|solution-poly|bound-check|identity|hyperbola-div")
        ->required();
    resultant->add_option("--P", P_str, "P coefficients, descending");
    resultant->add_option("--Q", Q_str, "Q coefficients, descending");
    resultant->add_option("--tuple", tuple, "solution tuple x1,...,x2k");
    resultant->add_option("--N", bigN, "bound parameter N");
    resultant->add_option("--sigma", sigma, "rational sigma");
    resultant->add_option("--theta", theta, "rational theta");
    resultant->add_option("--A", A, "coefficient bound A");
    resultant->add_option("--B", B, "hyperbola B");
    resultant->add_option("--bound", bound, "solution box bound");
    resultant->add_option("--vals", vals, "identity inputs x,y,z,a1,a2,b1,b2");

    auto* sweep = app.add_subcommand("sweep", "theorem-vs-measurement grids");
    add_common(sweep);
    sweep->add_option("--theorem", theorem, "T1..T6, T8..T15, T17, BT")->required();
    sweep->add_option("--p-list", p_list, "comma list of primes");
    sweep->add_option("--N-list", N_list, "comma list of interval lengths");
    sweep->add_option("--N2-list", N2_list, "comma list of second lengths");
    sweep->add_option("--k-list", k_list, "comma list of k");
    sweep->add_option("--k2-list", k2_list, "comma list of k2");
    sweep->add_option("--n-list", n_list, "comma list of n");
    sweep->add_option("--a-list", a_list, "comma list of interval offsets");
    sweep->add_option("--xi-list", xi_list, "comma list of xi");
    sweep->add_option("--theta-list", theta_list, "comma list of theta");
    sweep->add_option("--x", bt_x, "Brun-Titchmarsh x");
    sweep->add_option("--samples", samples, "sampled a per grid point");
    sweep->add_option("--t4-c", t4_c, "theorem-4 constant c (rational)");
    double slack = 0.4;
    sweep->add_option("--slack", slack, "exponent slack absorbing o(1) factors");

    auto* verify = app.add_subcommand("verify", "invariant suites");
    verify->add_option("--suite", suite, "oracle|identities|lattice|weil|transfer|all")
        ->required();

    auto* bt = app.add_subcommand("bt-report", "Brun-Titchmarsh table");
    add_common(bt);
    bt->add_option("--x", bt_x, "sieve bound x (<= 1e8)");
    bt->add_option("--theta-list", theta_list, "comma list of theta in (0,1)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (count->parsed())
            return run_count(op, c, lambda, bigN, r, sigma, a0, b0, u0, v0);
        if (expsum->parsed())
            return run_expsum(op, c, a, b, bigN, r, xi, n1, n2, k1, k2, ratio, samples);
        if (lattice->parsed()) return run_lattice(op, c, lambda, c1, c2, box_str, bigN);
        if (resultant->parsed())
            return run_resultant(op, P_str, Q_str, tuple, bigN, sigma, theta, A, vals, B, bound);
        if (sweep->parsed()) {
            SweepConfig cfg;
            cfg.theorem = theorem;
            if (!p_list.empty()) cfg.p_list = parse_list<u64>(p_list, to_u64);
            if (!N_list.empty()) cfg.N_list = parse_list<u64>(N_list, to_u64);
            if (!N2_list.empty()) cfg.N2_list = parse_list<u64>(N2_list, to_u64);
            if (!k_list.empty()) cfg.k_list = parse_list<int>(k_list, to_int);
            if (!k2_list.empty()) cfg.k2_list = parse_list<int>(k2_list, to_int);
            if (!n_list.empty()) cfg.n_list = parse_list<int>(n_list, to_int);
            if (!a_list.empty()) cfg.a_offsets = parse_list<u64>(a_list, to_u64);
            if (!xi_list.empty()) cfg.xi_list = parse_list<double>(xi_list, to_dbl);
            if (!theta_list.empty()) cfg.theta_list = parse_list<double>(theta_list, to_dbl);
            cfg.bt_x = bt_x;
            cfg.backend = parse_backend(c.backend);
            cfg.seed = c.seed;
            cfg.threads = c.threads;
            cfg.samples = samples;
            cfg.t4_c = parse_rational(t4_c);
            cfg.slack = slack;
            auto records = run_sweep(cfg);
            emit_records(records, c.format, c.out);
            return 0;
        }
        if (verify->parsed()) {
            auto rep = verify_suite(suite);
            for (const auto& line : rep.checks)
                std::cout << line.name << ": " << line.passed << "/" << line.total
                          << (line.ok() ? "" : "  <-- FAIL") << "\n";
            std::cout << "suite '" << suite << "': " << (rep.ok() ? "PASS" : "FAIL") << "\n";
            return rep.ok() ? 0 : 1;
        }
        if (bt->parsed()) {
            auto rows = brun_titchmarsh_report(bt_x, parse_list<double>(theta_list, to_dbl));
            std::cout << "theta,q,pi,c_measured\n";
            bool positive = true;
            for (const auto& row : rows) {
                std::cout << format_double(row.theta) << "," << row.q << "," << row.pi_count << ","
                          << format_double(row.c_measured) << "\n";
                positive = positive && row.c_measured > 0;
            }
            return positive ? 0 : 1;
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 3;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const HypothesisError& e) {
        std::cerr << "hypothesis error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
