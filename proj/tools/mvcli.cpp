// Command-line front end: character tables, Marino-Vafa character sums,
// identity verification, Hodge-integral extraction, and the final-calculation
// kernel, with deterministic JSON or text output.
//
// Exit status: 0 success / verification pass, 1 verification failure or a
// violated exact identity, 2 usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mv/characters.hpp"
#include "mv/errors.hpp"
#include "mv/json_io.hpp"
#include "mv/kernel.hpp"
#include "mv/mv_series.hpp"
#include "mv/schur.hpp"

using namespace mv;

namespace {

constexpr int kMaxTableDegree = 12;
constexpr int kMaxSeriesDegree = 8;

struct Output {
    std::string path;  // empty = stdout

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(path);
        if (!f) throw std::invalid_argument("cannot open output file " + path);
        f << text;
    }
};

std::string text_of(const CharacterTable& t) {
    std::ostringstream os;
    os << "S_" << t.d << " character table (rows: irreducibles, columns: classes)\n";
    os << "          ";
    for (const Partition& c : t.labels) os << c.str() << "\t";
    os << "\n";
    for (size_t v = 0; v < t.labels.size(); ++v) {
        os << t.labels[v].str() << "\t";
        for (size_t m = 0; m < t.labels.size(); ++m) os << t.values[v][m].get_str() << "\t";
        os << "\n";
    }
    return os.str();
}

std::string text_of(const MVSeries& s) {
    std::ostringstream os;
    os << (s.connected ? "connected" : "disconnected") << " series, d=" << s.d
       << ", lambda order " << s.window.lambda_order << ", tau cap " << s.window.tau_cap << "\n";
    for (const auto& [mu, c] : s.element.terms())
        os << "p" << mu.str() << " : " << c.tau_truncated(s.window.tau_cap).str() << "\n";
    return os.str();
}

std::string text_of(const HodgePolynomial& h) {
    std::ostringstream os;
    os << "H(g=" << h.g << ", mu=" << h.mu.str() << ") =";
    bool first = true;
    for (size_t k = 0; k < h.coeffs.size(); ++k) {
        if (h.coeffs[k] == 0 && !(h.coeffs.size() == 1)) continue;
        os << (first ? " " : " + ") << rat_string(h.coeffs[k]);
        if (k == 1) os << "*t";
        if (k > 1) os << "*t^" << k;
        first = false;
    }
    os << "\n";
    return os.str();
}

std::string text_of(const KernelReport& k) {
    std::ostringstream os;
    os << "l=" << k.l << " r=" << k.r << " kernel dimension " << k.kernel_dim << "\n";
    if (!k.kernel_vector.empty()) {
        os << "kernel vector:";
        for (const Rat& c : k.kernel_vector) os << " " << rat_string(c);
        os << "\n";
    }
    return os.str();
}

std::string text_of(const VerifyReport& r) {
    if (r.pass) return "PASS\n";
    const FailureLocator& f = *r.first_failure;
    return "FAIL: " + f.context + " at mu=" + f.mu.str() + " lambda^" + std::to_string(f.lambda_exp) +
           " tau^" + std::to_string(f.tau_exp) + " expected=" + f.expected + " actual=" + f.actual + "\n";
}

template <typename T>
void emit(const T& value, const std::string& format, const Output& out) {
    if (format == "text")
        out.write(text_of(value));
    else
        out.write(json_of(value).dump(2) + "\n");
}

int finish_verify(const VerifyReport& r, const std::string& format, const Output& out) {
    emit(r, format, out);
    return r.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Marino-Vafa character sums, cut-and-join verification, and Hodge extraction"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json";
    std::string out_path;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", out_path, "Write output to a file instead of stdout");

    int d = 0, g = 0, l = 0, r = 0;
    int lambda_order = 8, tau_degree = 6;
    bool connected = false;
    std::string mu_text, target;

    auto* chartable = app.add_subcommand("chartable", "Character table of the symmetric group S_d");
    chartable->add_option("--d", d, "Group degree")->required();

    auto* series = app.add_subcommand("series", "Character-sum generating function in the p_mu basis");
    series->add_option("--d", d, "Maximum degree |mu|")->required();
    series->add_option("--lambda-order", lambda_order, "Lambda truncation order (default 8)");
    series->add_option("--tau-degree", tau_degree, "Tau degree cap for output (default 6)");
    series->add_flag("--connected", connected, "Connected form (graded logarithm)");

    auto* verify = app.add_subcommand("verify", "Verify an exact identity");
    verify
        ->add_option("target", target,
                     "One of: cut-and-join, initial, schur, cauchy, hooks, eigen, kernel, reconstruct, v-forms")
        ->required();
    verify->add_option("--d", d, "Degree bound (target dependent default)");
    verify->add_option("--lambda-order", lambda_order, "Lambda truncation order (default 8)");
    verify->add_option("--tau-degree", tau_degree, "Tau degree cap (default 6)");
    verify->add_flag("--connected", connected, "Use the connected cut-and-join equation");

    auto* hodge = app.add_subcommand("hodge", "Extract the Hodge-integral polynomial H_{g,mu}(tau)");
    hodge->add_option("--g", g, "Genus")->required();
    hodge->add_option("--mu", mu_text, "Partition, e.g. 2,1,1")->required();
    hodge->add_option("--lambda-order", lambda_order, "Lambda truncation order (default 8)");

    auto* reconstruct = app.add_subcommand("reconstruct", "Degree-d slice via the matrix exponential flow");
    reconstruct->add_option("--d", d, "Slice degree")->required();
    reconstruct->add_option("--lambda-order", lambda_order, "Lambda truncation order (default 8)");
    reconstruct->add_option("--tau-degree", tau_degree, "Tau Taylor degree (default 6)");

    auto* kernel = app.add_subcommand("kernel", "Kernel of the final-calculation linear system");
    kernel->add_option("--l", l, "Number of equations")->required();
    kernel->add_option("--r", r, "Parameter r >= l")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Output out{out_path};
    try {
        if (chartable->parsed()) {
            if (d < 1 || d > kMaxTableDegree)
                throw std::invalid_argument("chartable: need 1 <= d <= " + std::to_string(kMaxTableDegree));
            emit(cached_character_table(d), format, out);
            return 0;
        }
        if (series->parsed()) {
            if (d < 1 || d > kMaxSeriesDegree)
                throw std::invalid_argument("series: need 1 <= d <= " + std::to_string(kMaxSeriesDegree));
            if (lambda_order <= -d) throw std::invalid_argument("series: lambda-order too small");
            MVSeries s = connected ? connected_series(d, lambda_order, tau_degree)
                                   : disconnected_series(d, lambda_order, tau_degree);
            emit(s, format, out);
            return 0;
        }
        if (hodge->parsed()) {
            Partition mu = Partition::parse(mu_text);
            if (mu.size() < 1 || mu.size() > kMaxSeriesDegree)
                throw std::invalid_argument("hodge: need 1 <= |mu| <= " + std::to_string(kMaxSeriesDegree));
            if (g < 0) throw std::invalid_argument("hodge: g must be >= 0");
            emit(hodge_extract(g, mu, lambda_order), format, out);
            return 0;
        }
        if (reconstruct->parsed()) {
            if (d < 1 || d > kMaxSeriesDegree)
                throw std::invalid_argument("reconstruct: need 1 <= d <= " + std::to_string(kMaxSeriesDegree));
            emit(ode_reconstruct(d, tau_degree, lambda_order), format, out);
            return 0;
        }
        if (kernel->parsed()) {
            if (l < 1 || l > 64 || r < l || r > 128)
                throw std::invalid_argument("kernel: need 1 <= l <= r (l <= 64, r <= 128)");
            KernelReport rep = kernel_solver(l, r);
            emit(rep, format, out);
            return rep.kernel_dim == 1 && rep.matches_signed_binomials() ? 0 : 1;
        }
        if (verify->parsed()) {
            auto need_d = [&](int def, int cap) {
                if (d == 0) d = def;
                if (d < 1 || d > cap)
                    throw std::invalid_argument("verify: need 1 <= d <= " + std::to_string(cap));
            };
            if (target == "cut-and-join") {
                need_d(3, kMaxSeriesDegree);
                return finish_verify(verify_cutjoin(d, lambda_order, tau_degree, connected), format, out);
            }
            if (target == "initial") {
                need_d(4, kMaxSeriesDegree);
                return finish_verify(initial_condition_check(d, lambda_order), format, out);
            }
            if (target == "schur") {
                need_d(5, 7);
                return finish_verify(verify_schur(d), format, out);
            }
            if (target == "cauchy") {
                need_d(4, 6);
                return finish_verify(verify_cauchy(d, 3), format, out);
            }
            if (target == "hooks") {
                need_d(12, kPartitionSoftCap);
                return finish_verify(verify_hook_identities(d), format, out);
            }
            if (target == "eigen") {
                need_d(6, 9);
                return finish_verify(verify_eigenvectors(d), format, out);
            }
            if (target == "kernel") {
                need_d(8, 20);
                return finish_verify(verify_kernel(d, 2 * d), format, out);
            }
            if (target == "reconstruct") {
                need_d(3, kMaxSeriesDegree);
                return finish_verify(verify_ode_reconstruct(d, tau_degree, lambda_order), format, out);
            }
            if (target == "v-forms") {
                need_d(6, 9);
                return finish_verify(verify_vforms(d), format, out);
            }
            throw std::invalid_argument("verify: unknown target '" + target + "'");
        }
    } catch (const IdentityViolation& e) {
        std::cerr << "identity violation: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
