// aos: list catalog cases, verify them, dump Gram matrices and Schur tables.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "aos/catalog.hpp"
#include "aos/report.hpp"

namespace {

using namespace aos;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Overrides parse_params(const std::vector<std::string>& kv) {
    Overrides ov;
    for (const auto& s : kv) {
        auto eq = s.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("--param expects key=value, got '" + s + "'");
        ov[s.substr(0, eq)] = s.substr(eq + 1);
    }
    return ov;
}

void write_output(const std::string& path, const std::string& body) {
    if (path.empty() || path == "-") {
        std::cout << body;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot open '" + path + "' for writing");
    out << body;
}

int resolve_jobs(int flag) {
    if (const char* env = std::getenv("AOS_JOBS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    if (flag > 0) return flag;
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

struct VerifyArgs {
    std::string id;
    int N = 32;
    std::vector<std::string> params;
    double tol = 1e-12;
    std::string format = "json";
    std::string out;
    bool all = false;
    int jobs = 0;
};

int cmd_verify(const VerifyArgs& a) {
    if (a.N < 1 || a.N > 128) throw UsageError("--N must lie in [1, 128]");
    if (!(a.tol > 0)) throw UsageError("--tol must be positive");
    if (a.all == !a.id.empty()) throw UsageError("give either a case id or --all");
    const Overrides ov = parse_params(a.params);
    if (a.all && !ov.empty()) throw UsageError("--param cannot be combined with --all");

    std::vector<std::string> ids;
    if (a.all)
        for (const auto& c : list_cases()) ids.push_back(c.id);
    else
        ids.push_back(a.id);

    // Instantiate up front so usage errors surface before any work starts.
    std::vector<CaseInstance> cases;
    for (const auto& id : ids) {
        try {
            cases.push_back(instantiate(id, ov));
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::unknown_case || e.kind() == ErrorKind::invalid_parameter) throw UsageError(e.what());
            throw;
        }
    }

    RunOptions opt;
    opt.N = a.N;
    opt.tol = a.tol;
    std::vector<CaseReport> reports(cases.size());
    std::vector<double> timings(cases.size(), 0.0);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cases.size(); i = next++) {
            auto t0 = std::chrono::steady_clock::now();
            reports[i] = run_case(cases[i], opt);
            auto t1 = std::chrono::steady_clock::now();
            timings[i] = std::chrono::duration<double, std::milli>(t1 - t0).count();
        }
    };
    const int jobs = std::min<int>(resolve_jobs(a.jobs), static_cast<int>(cases.size()));
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::string body;
    if (a.format == "json")
        body = report_document(reports, timings, !a.all).dump(2) + "\n";
    else if (a.format == "csv")
        body = report_csv(reports);
    else
        body = report_markdown(reports);
    write_output(a.out, body);

    bool fail = false;
    std::ostream& summary = (a.out.empty() || a.out == "-") ? std::cerr : std::cout;
    for (const auto& r : reports) {
        summary << summary_line(r) << '\n';
        fail = fail || r.status == Status::fail;
    }
    return fail ? kExitFail : 0;
}

CaseInstance instantiate_or_usage(const std::string& id, const std::vector<std::string>& params) {
    try {
        return instantiate(id, parse_params(params));
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::unknown_case || e.kind() == ErrorKind::invalid_parameter) throw UsageError(e.what());
        throw;
    }
}

int cmd_gram(const std::string& id, int N, const std::string& mode, const std::vector<std::string>& params,
             const std::string& out) {
    if (N < 1 || N > 128) throw UsageError("--N must lie in [1, 128]");
    GramMode gm;
    try {
        gm = parse_gram_mode(mode);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    CaseInstance c = instantiate_or_usage(id, params);
    GramMatrix g = build_gram(c.space, c.family, N, gm);
    write_output(out, gram_csv(g));
    return 0;
}

int cmd_schur(const std::string& id, const std::vector<int>& Ns, const std::vector<std::string>& params,
              const std::string& format) {
    for (int N : Ns)
        if (N < 1 || N > 128) throw UsageError("--N-list entries must lie in [1, 128]");
    CaseInstance c = instantiate_or_usage(id, params);
    const bool csv = format == "csv";
    if (csv)
        std::cout << "N,finite_sup,tail_bound,C,certified\n";
    else
        std::cout << std::left << std::setw(6) << "N" << std::setw(22) << "finite_sup" << std::setw(22) << "tail"
                  << std::setw(22) << "certified_C" << "certified\n";
    for (int N : Ns) {
        GramMatrix g = build_gram(c.space, c.family, N, GramMode::closed);
        SchurEstimate s = schur_constant(g, c.c_upper);
        std::ostringstream row;
        row << std::setprecision(15);
        if (csv) {
            row << N << ',' << s.finite_sup << ',' << s.tail_bound << ',' << s.upper() << ','
                << (s.certified ? "yes" : "no");
        } else {
            row << std::left << std::setw(6) << N << std::setw(22) << s.finite_sup << std::setw(22) << s.tail_bound
                << std::setw(22) << s.upper() << (s.certified ? "yes" : "no");
        }
        std::cout << row.str() << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"almost-orthogonal series: Gram operators, Schur constants and Bessel-type inequalities"};
    app.require_subcommand(1);

    auto* list = app.add_subcommand("list", "print the case roster");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "run the full check bundle for a case");
    verify->add_option("case", va.id, "case id");
    verify->add_option("--N", va.N, "truncation size (<= 128)");
    verify->add_option("--param", va.params, "parameter override key=value (repeatable)");
    verify->add_option("--tol", va.tol, "quadrature tolerance entering the Bessel budget");
    verify->add_option("--format", va.format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md"}));
    verify->add_option("--out", va.out, "output path (default: standard output)");
    verify->add_flag("--all", va.all, "run every case");
    verify->add_option("--jobs", va.jobs, "worker threads for --all (AOS_JOBS overrides)");

    std::string gid, gmode = "closed", gout;
    int gN = 8;
    std::vector<std::string> gparams;
    auto* gram = app.add_subcommand("gram", "dump Gram entries as CSV");
    gram->add_option("case", gid, "case id")->required();
    gram->add_option("--N", gN, "truncation size");
    gram->add_option("--mode", gmode, "closed, numeric or both");
    gram->add_option("--param", gparams, "parameter override key=value (repeatable)");
    gram->add_option("--out", gout, "output path (default: standard output)");

    std::string sid, sformat = "table";
    std::vector<int> sNs = {8, 16, 32, 64};
    std::vector<std::string> sparams;
    auto* schur = app.add_subcommand("schur", "finite sup, tail and certified C per N");
    schur->add_option("case", sid, "case id")->required();
    schur->add_option("--N-list", sNs, "comma separated list of N")->delimiter(',');
    schur->add_option("--param", sparams, "parameter override key=value (repeatable)");
    schur->add_option("--format", sformat, "table or csv")->check(CLI::IsMember({"table", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (list->parsed()) {
            for (const auto& c : list_cases()) std::cout << c.id << "  " << c.summary << '\n';
            return 0;
        }
        if (verify->parsed()) return cmd_verify(va);
        if (gram->parsed()) return cmd_gram(gid, gN, gmode, gparams, gout);
        if (schur->parsed()) return cmd_schur(sid, sNs, sparams, sformat);
    } catch (const UsageError& e) {
        std::cerr << "aos: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "aos: " << e.what() << '\n';
        return kExitFail;
    }
    return kExitUsage;
}
