#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "qdissect/claims.hpp"
#include "qdissect/congruence.hpp"
#include "qdissect/dissect.hpp"
#include "qdissect/errors.hpp"
#include "qdissect/json_io.hpp"
#include "qdissect/mod_series.hpp"
#include "qdissect/theta.hpp"

namespace {

using namespace qdissect;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw Error("cannot open output file " + out_path);
    f << text;
}

std::string progression_text(const CheckReport& r) {
    if (r.progressions.empty()) return "identity";
    std::string s;
    for (std::size_t i = 0; i < r.progressions.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(r.progressions[i].first) + "n+" +
             std::to_string(r.progressions[i].second);
    }
    return s;
}

std::string report_text(const CheckReport& r) {
    std::ostringstream os;
    os << "claim: " << r.claim << "\n";
    os << "modulus: " << (r.modulus == 0 ? std::string("exact") : to_string(r.modulus))
       << "\n";
    os << "progression: " << progression_text(r) << "\n";
    os << "checked: " << r.checked << "\n";
    os << "status: " << (r.passed() ? "pass" : "fail") << "\n";
    for (const auto& v : r.violations)
        os << "violation at n=" << to_string(v.n) << ": " << v.value << "\n";
    return os.str();
}

std::string summary_table(const std::vector<CheckReport>& reports) {
    std::size_t id_width = 5;
    for (const auto& r : reports) id_width = std::max(id_width, r.claim.size());
    std::ostringstream os;
    os << std::left << std::setw(static_cast<int>(id_width) + 2) << "claim"
       << std::setw(8) << "status" << std::setw(10) << "checked"
       << std::setw(10) << "modulus" << "violations\n";
    std::size_t failures = 0;
    for (const auto& r : reports) {
        os << std::left << std::setw(static_cast<int>(id_width) + 2) << r.claim
           << std::setw(8) << (r.passed() ? "pass" : "fail") << std::setw(10) << r.checked
           << std::setw(10) << (r.modulus == 0 ? std::string("exact") : to_string(r.modulus))
           << r.violations.size() << "\n";
        if (!r.passed()) ++failures;
    }
    if (failures == 0)
        os << "all " << reports.size() << " claims pass\n";
    else
        os << failures << " of " << reports.size() << " claims FAIL\n";
    return os.str();
}

int cmd_expand(const std::string& series, long precision, long modulus,
               const std::string& format, const std::string& out_path) {
    const bool deep = modulus != 0 && (series == "b" || series == "a" || series == "p");
    std::ostringstream os;
    if (deep) {
        const auto m = static_cast<std::uint64_t>(modulus);
        ModSeries s = series == "b"   ? gen_b_mod(precision, m)
                      : series == "a" ? gen_a_mod(precision, m)
                                      : gen_p_mod(precision, m);
        if (format == "json") {
            nlohmann::json j;
            j["series"] = series;
            j["modulus"] = std::to_string(modulus);
            j["valuation"] = 0;
            j["precision"] = s.precision();
            nlohmann::json coeffs = nlohmann::json::array();
            for (long n = 0; n < s.precision(); ++n) coeffs.push_back(std::to_string(s.at(n)));
            j["coeffs"] = coeffs;
            os << j.dump(2) << "\n";
        } else {
            os << "# " << series << "(n) mod " << modulus << ", n < " << s.precision()
               << "\n";
            for (long n = 0; n < s.precision(); ++n) os << n << " " << s.at(n) << "\n";
        }
        emit(os.str(), out_path);
        return 0;
    }

    QSeries s = [&]() -> QSeries {
        if (series == "b") return gen_b(precision);
        if (series == "a") return gen_a(precision);
        if (series == "p") return gen_p(precision);
        if (series == "phi") return phi_minus(1, precision);
        if (series == "phi3") return phi_minus(3, precision);
        if (series == "psi") return psi(1, precision);
        if (series == "w") return w_quotient(1, precision);
        if (series == "xi") return xi_series(1, precision);
        if (series == "kappa") return kappa(1, precision);
        throw Error("unknown series '" + series + "'");
    }();
    if (modulus != 0) s = reduce_mod(s, modulus);

    if (format == "json") {
        nlohmann::json j = to_json(s);
        j["series"] = series;
        if (modulus != 0) j["modulus"] = std::to_string(modulus);
        os << j.dump(2) << "\n";
    } else {
        os << "# " << series << "(n)";
        if (modulus != 0) os << " mod " << modulus;
        os << ", n < " << s.precision() << "\n";
        for (long n = s.valuation(); n < s.precision(); ++n)
            os << n << " " << to_string(s.coeff(n)) << "\n";
    }
    emit(os.str(), out_path);
    return 0;
}

int cmd_dissect(long steps, long modulus, const std::string& format,
                const std::string& out_path) {
    const ChainResult chain = dissect_chain(rep_for_b(), steps, modulus);
    if (format == "json") {
        nlohmann::json j;
        j["start"] = to_json(normalize_display(rep_for_b()));
        nlohmann::json step_list = nlohmann::json::array();
        BigInt period = 1;
        BigInt offset = 0;
        for (const DissectStep& step : chain.steps) {
            offset += step.ell * period;
            period *= 3;
            nlohmann::json sj;
            sj["ell"] = step.ell;
            sj["period"] = to_string(period);
            sj["offset"] = to_string(offset);
            sj["rep"] = to_json(normalize_display(step.rep));
            step_list.push_back(sj);
        }
        j["steps"] = step_list;
        j["period"] = to_string(chain.period);
        j["offset"] = to_string(chain.offset);
        emit(j.dump(2) + "\n", out_path);
        return 0;
    }
    std::ostringstream os;
    os << "start:\n" << normalize_display(rep_for_b()).to_text() << "\n";
    BigInt period = 1;
    BigInt offset = 0;
    for (std::size_t i = 0; i < chain.steps.size(); ++i) {
        const DissectStep& step = chain.steps[i];
        offset += step.ell * period;
        period *= 3;
        os << "step " << (i + 1) << ": take n == " << step.ell
           << " (mod 3); now generating coefficients of " << to_string(period) << "n+"
           << to_string(offset) << "\n";
        os << normalize_display(step.rep).to_text() << "\n";
    }
    os << "final progression: " << to_string(chain.period) << "n+"
       << to_string(chain.offset) << "\n";
    emit(os.str(), out_path);
    return 0;
}

int cmd_verify(const std::string& claim_id, const RunConfig& config,
               const std::string& format, const std::string& out_path) {
    const Claim& claim = find_claim(claim_id);
    const CheckReport report = claim.run(config);
    if (format == "json")
        emit(to_json(report).dump(2) + "\n", out_path);
    else
        emit(report_text(report), out_path);
    return report.passed() ? 0 : 1;
}

int cmd_reproduce(const RunConfig& config, const std::string& format,
                  const std::string& out_path) {
    const std::vector<CheckReport> reports = reproduce_paper(config);
    bool all_pass = true;
    for (const auto& r : reports) all_pass = all_pass && r.passed();
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        emit(arr.dump(2) + "\n", out_path);
    } else {
        emit(summary_table(reports), out_path);
    }
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-series expansion, 3-dissection, and congruence verification"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string out_path;
    const auto is_format = CLI::IsMember({"text", "json"});

    // expand
    auto* expand = app.add_subcommand("expand", "expand a named series to N terms");
    std::string series = "b";
    long ex_precision = 2000;
    long ex_mod = 0;
    expand->add_option("--series", series, "one of b|a|p|phi|phi3|psi|w|xi|kappa")
        ->check(CLI::IsMember({"b", "a", "p", "phi", "phi3", "psi", "w", "xi", "kappa"}));
    expand->add_option("--precision", ex_precision, "number of terms")
        ->check(CLI::PositiveNumber);
    expand->add_option("--mod", ex_mod, "reduce coefficients mod M")
        ->check(CLI::Range(2L, (1L << 62)));
    expand->add_option("--format", format, "text|json")->check(is_format);
    expand->add_option("--out", out_path, "write to a file instead of stdout");

    // dissect
    auto* dissect = app.add_subcommand("dissect", "run the 3-dissection chain for b(n)");
    long steps = 2;
    long di_mod = 0;
    dissect->add_option("--steps", steps, "number of dissection steps")
        ->check(CLI::NonNegativeNumber);
    dissect->add_option("--mod", di_mod, "reduce weights mod an odd M after each step")
        ->check(CLI::Range(3L, (1L << 62)));
    dissect->add_option("--format", format, "text|json")->check(is_format);
    dissect->add_option("--out", out_path, "write to a file instead of stdout");

    // verify
    auto* verify = app.add_subcommand("verify", "check one registered claim");
    std::string claim_id;
    long ve_precision = 0;
    long ve_steps = 0;
    bool ve_mutate = false;
    verify->add_option("claim", claim_id, "claim id from the registry")->required();
    verify->add_option("--precision", ve_precision, "override the claim's default range")
        ->check(CLI::PositiveNumber);
    verify->add_option("--steps", ve_steps, "override the chain length (where it applies)")
        ->check(CLI::PositiveNumber);
    verify->add_flag("--inject-mutation", ve_mutate)->group(""); // test hook, hidden
    verify->add_option("--format", format, "text|json")->check(is_format);
    verify->add_option("--out", out_path, "write to a file instead of stdout");

    // reproduce-paper
    auto* repro = app.add_subcommand(
        "reproduce-paper", "run every registered claim and summarize");
    long rp_precision = 0;
    bool rp_mutate = false;
    repro->add_option("--precision", rp_precision, "override every claim's default range")
        ->check(CLI::PositiveNumber);
    repro->add_flag("--inject-mutation", rp_mutate)->group(""); // test hook, hidden
    repro->add_option("--format", format, "text|json")->check(is_format);
    repro->add_option("--out", out_path, "write to a file instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (expand->parsed()) return cmd_expand(series, ex_precision, ex_mod, format, out_path);
        if (dissect->parsed()) return cmd_dissect(steps, di_mod, format, out_path);
        if (verify->parsed()) {
            RunConfig config;
            if (ve_precision > 0) config.precision = ve_precision;
            config.steps = ve_steps;
            config.inject_mutation = ve_mutate;
            return cmd_verify(claim_id, config, format, out_path);
        }
        RunConfig config;
        if (rp_precision > 0) config.precision = rp_precision;
        config.inject_mutation = rp_mutate;
        return cmd_reproduce(config, format, out_path);
    } catch (const qdissect::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
