#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "wha/export.hpp"
#include "wha/recoupling.hpp"
#include "wha/verify.hpp"

using namespace wha;

namespace {

constexpr int kExitOk = 0, kExitFail = 1, kExitUsage = 2;
constexpr int kMaxLevel = 8;

void check_level(int r, bool allow_large) {
    if (r < 2) throw InputError("--r must be at least 2");
    if (r > kMaxLevel && !allow_large)
        throw InputError("--r " + std::to_string(r) + " exceeds the memory guard (" + std::to_string(kMaxLevel) +
                         "); pass --allow-large to override");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << text;
    if (!out) throw InputError("write failed: " + path);
}

std::vector<int> parse_labels(const std::string& list) {
    std::vector<int> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw InputError("bad label: " + item);
        }
    }
    return out;
}

void print_scalar(std::ostream& os, const CycloScalar& c, int digits) {
    os << c.to_string();
    if (digits > 0) {
        auto [re, im] = c.to_complex(static_cast<int>(std::ceil(digits * 3.3219280948873623)));
        os << "  ~ " << re;
        if (im != "0") os << (im.front() == '-' ? " - " : " + ") << (im.front() == '-' ? im.substr(1) : im) << "i";
    }
}

struct BuildArgs {
    int r = 0;
    std::string out, tables;
    bool allow_large = false;
};

int cmd_build(const BuildArgs& a) {
    check_level(a.r, a.allow_large);
    ExportSelection sel = a.tables.empty() ? ExportSelection{} : parse_selection(a.tables);
    auto t = build_tables(a.r, Conventions{}, sel);
    write_file(a.out, export_tables(t, sel));
    std::cout << "wrote " << a.out << " (r=" << a.r << ", dim " << t.basis.size() << ")\n";
    return kExitOk;
}

struct VerifyArgs {
    int r = 0;
    std::string tables, report;
    std::vector<std::string> suites;
    std::size_t sample = 0;
    std::uint64_t seed = 42;
    bool allow_large = false, timing = false;
};

int cmd_verify(const VerifyArgs& a) {
    std::shared_ptr<const StructureTables> t;
    if (!a.tables.empty()) {
        t = std::make_shared<StructureTables>(import_tables(read_file(a.tables)));
    } else {
        check_level(a.r, a.allow_large);
        t = std::make_shared<StructureTables>(build_tables(a.r, Conventions{}));
    }
    Algebra H(t);
    auto specs = select_checks(a.suites);
    SuiteOptions opts;
    opts.seed = a.seed;
    if (a.sample > 0) {
        opts.samples = a.sample;
        for (auto& s : specs) s.force_sampled = true;
    }
    auto rep = run_suite(H, specs, opts);
    const auto json = rep.to_json(a.timing);
    if (a.report.empty() || a.report == "-") {
        std::cout << json;
        std::cerr << rep.summary();
    } else {
        write_file(a.report, json);
        std::cout << rep.summary();
    }
    return rep.passed() ? kExitOk : kExitFail;
}

int cmd_smatrix(int r, int digits, bool allow_large) {
    check_level(r, allow_large);
    if (digits < 0) throw InputError("--numeric must be non-negative");
    auto H = build_algebra(r, Conventions{});
    const auto& s = H.tables().smatrix;
    if (s.rows() == 0) throw std::logic_error("q-tilde identity failed for the pinned conventions");
    std::cout << "q-tilde (r=" << r << ", " << s.rows() << "x" << s.cols() << ", A = exp(i pi/" << 2 * r << "))\n";
    for (int i = 0; i < s.rows(); ++i)
        for (int j = 0; j < s.cols(); ++j) {
            std::cout << "[" << i << "," << j << "] ";
            print_scalar(std::cout, s.at(i, j), digits);
            std::cout << "\n";
        }
    const auto det = determinant(s);
    std::cout << "det: ";
    print_scalar(std::cout, det, digits);
    std::cout << "\nmodular: " << (det.is_zero() ? "false" : "true") << "\n";
    return kExitOk;
}

int cmd_recoupling(int r, const std::string& op, const std::string& labels, int digits) {
    check_level(r, true);
    const auto& R = RecouplingTables::get(r);
    const auto l = parse_labels(labels);
    auto need = [&](std::size_t n) {
        if (l.size() != n) throw InputError("--op " + op + " takes " + std::to_string(n) + " labels");
    };
    CycloScalar value;
    if (op == "dim") need(1), value = R.dim(l[0]);
    else if (op == "twist") need(1), value = R.twist(l[0]);
    else if (op == "theta") need(3), value = R.theta(l[0], l[1], l[2]);
    else if (op == "tet") need(6), value = R.tet(l[0], l[1], l[2], l[3], l[4], l[5]);
    else if (op == "sixj") need(6), value = R.sixj(l[0], l[1], l[2], l[3], l[4], l[5]);
    else if (op == "hopf") need(2), value = R.hopf_link(l[0], l[1]);
    else throw InputError("unknown --op " + op);
    print_scalar(std::cout, value, digits);
    std::cout << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact weak Hopf algebra from the quantum sl2 modular category"};
    app.require_subcommand(1);

    BuildArgs b;
    auto* build = app.add_subcommand("build", "Build the structure tables and export them");
    build->add_option("--r", b.r, "Level r (A is a primitive 4r-th root of unity)")->required();
    build->add_option("--out", b.out, "Output path")->required();
    build->add_option("--tables", b.tables, "Subset of mu,delta,s,forms");
    build->add_flag("--allow-large", b.allow_large, "Permit r above the memory guard");

    VerifyArgs v;
    auto* verify = app.add_subcommand("verify", "Run the verification suites");
    auto* vr = verify->add_option("--r", v.r, "Level r");
    auto* vt = verify->add_option("--tables", v.tables, "Verify tables loaded from an exported file");
    vr->excludes(vt);
    verify->add_option("--suite", v.suites, "Check name or suite prefix (repeatable)");
    verify->add_option("--sample", v.sample, "Sample K tuples for every tuple check");
    verify->add_option("--seed", v.seed, "Sampling seed");
    verify->add_option("--report", v.report, "JSON report path (default stdout)");
    verify->add_flag("--timing", v.timing, "Include wall-clock timings in the report");
    verify->add_flag("--allow-large", v.allow_large, "Permit r above the memory guard");

    int sr = 0, digits = 0;
    bool s_large = false;
    auto* smatrix = app.add_subcommand("smatrix", "Print the q-tilde matrix, its determinant and the modularity verdict");
    smatrix->add_option("--r", sr, "Level r")->required();
    smatrix->add_option("--numeric", digits, "Also print numeric values with this many digits");
    smatrix->add_flag("--allow-large", s_large, "Permit r above the memory guard");

    int rr = 0, rdigits = 0;
    std::string op, labels;
    auto* recoupling = app.add_subcommand("recoupling", "Evaluate a recoupling quantity");
    recoupling->add_option("--r", rr, "Level r")->required();
    recoupling->add_option("--op", op, "theta|tet|sixj|dim|twist|hopf")->required();
    recoupling->add_option("--labels", labels, "Comma-separated labels")->required();
    recoupling->add_option("--numeric", rdigits, "Also print the numeric value with this many digits");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*build) return cmd_build(b);
        if (*verify) {
            if (v.tables.empty() && v.r == 0) throw InputError("verify needs --r or --tables");
            return cmd_verify(v);
        }
        if (*smatrix) return cmd_smatrix(sr, digits, s_large);
        if (*recoupling) return cmd_recoupling(rr, op, labels, rdigits);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::bad_alloc&) {
        std::cerr << "error: out of memory\n";
        return kExitUsage;
    }
    return kExitUsage;
}
