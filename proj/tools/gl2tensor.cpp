// Command-line front end: decompose tensor products and induced
// representations of GL2 over a small odd finite field, print the character
// table, classify self-dual irreducibles, and cross-check the closed forms
// against the brute-force character-table verifier.
#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gl2/analysis.hpp"
#include "gl2/decompose.hpp"
#include "gl2/oracle.hpp"

using nlohmann::json;
using namespace gl2;

namespace {

// Distinct from gl2::Error so main can map it to its own exit code.
struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sweeping q^2-1 candidate constituents over q^2-1 classes per product keeps
// the verifier honest but quadratic; past this it stops being interactive.
constexpr Int kMaxVerifyQ = 13;

Int parse_int(const std::string& text) {
    std::size_t used = 0;
    Int v = 0;
    try {
        v = std::stoll(text, &used);
    } catch (const std::exception&) {
        throw MalformedLabel("expected an integer, got '" + text + "'");
    }
    if (used != text.size())
        throw MalformedLabel("expected an integer, got '" + text + "'");
    return v;
}

// "a,b" -> two integers.
std::pair<Int, Int> parse_int_pair(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw MalformedLabel("expected 'a,b', got '" + text + "'");
    return {parse_int(text.substr(0, comma)), parse_int(text.substr(comma + 1))};
}

IrrepLabel parse_canonical(const FieldParams& fp, const std::string& text) {
    IrrepLabel canon = canonicalize(parse_irrep_label(fp, text));
    if (to_string(canon) != text)
        std::cerr << "note: " << text << " canonicalized to " << to_string(canon) << "\n";
    return canon;
}

json decomposition_json(const FieldParams& fp, const json& inputs, const Decomposition& d) {
    json out;
    out["q"] = fp.q;
    out["inputs"] = inputs;
    json constituents = json::array();
    for (const auto& [r, m] : d.terms()) {
        json c;
        c["label"] = to_string(r);
        c["dim"] = dimension(r);
        c["mult"] = m;
        constituents.push_back(c);
    }
    out["constituents"] = constituents;
    out["total_dim"] = d.total_dimension();
    out["multiplicity_free"] = (d.max_multiplicity() <= 1);
    return out;
}

void print_decomposition_text(const Decomposition& d) {
    for (const auto& [r, m] : d.terms())
        std::cout << "  " << to_string(r) << "  x" << m << "  (dim " << dimension(r) << ")\n";
    std::cout << "total dimension " << d.total_dimension() << "\n";
    std::cout << "multiplicity-free: " << (d.max_multiplicity() <= 1 ? "yes" : "no") << "\n";
}

// Cell grammar for table output: "exp:coeff" terms joined by ';', empty when
// the value is zero.  Shared by the csv and json writers.
std::string cell_string(const CycloValue& v) {
    std::string s;
    for (const auto& [e, c] : v.terms()) {
        if (!s.empty()) s += ';';
        s += std::to_string(e) + ":" + std::to_string(c);
    }
    return s;
}

struct OracleContext {
    FieldParams fp;
    CharacterTable table;
    ModularEvaluator eval;
    Oracle oracle;

    OracleContext(const FieldParams& params, std::uint64_t seed)
        : fp(params), table(fp), eval(fp, seed), oracle(table, eval) {}
};

void run_irreps(const FieldParams& fp, const std::string& format) {
    std::vector<IrrepLabel> all = enumerate_irreps(fp);
    if (format == "json") {
        json out;
        out["q"] = fp.q;
        json list = json::array();
        for (const IrrepLabel& r : all) {
            json e;
            e["label"] = to_string(r);
            e["dim"] = dimension(r);
            e["central_character"] = central_character(r).a;
            e["self_dual"] = (dual(r) == r);
            list.push_back(e);
        }
        out["irreps"] = list;
        out["count"] = static_cast<Int>(all.size());
        std::cout << out.dump(2) << "\n";
        return;
    }
    std::cout << "q = " << fp.q << ", " << all.size() << " irreducibles\n";
    for (const IrrepLabel& r : all)
        std::cout << "  " << to_string(r) << "  dim " << dimension(r) << "  central "
                  << central_character(r).a << (dual(r) == r ? "  self-dual" : "") << "\n";
}

void run_tensor(const FieldParams& fp, const std::string& label1, const std::string& label2,
                const std::string& method, const std::string& format, std::uint64_t seed) {
    IrrepLabel r1 = parse_canonical(fp, label1);
    IrrepLabel r2 = parse_canonical(fp, label2);
    Decomposition d;
    if (method == "formula") {
        d = tensor_decompose(r1, r2);
    } else if (method == "pantoja") {
        d = pantoja_tensor(r1, r2);
    } else {
        OracleContext ctx(fp, seed);
        d = ctx.oracle.tensor_decompose(r1, r2);
    }
    json inputs = json::array({to_string(r1), to_string(r2)});
    if (format == "json") {
        std::cout << decomposition_json(fp, inputs, d).dump(2) << "\n";
        return;
    }
    std::cout << "q = " << fp.q << "\n" << to_string(r1) << " (x) " << to_string(r2) << "\n";
    print_decomposition_text(d);
}

void run_induce(const FieldParams& fp, const std::string& from, const std::string& char_text,
                const std::string& format) {
    Decomposition d;
    json inputs;
    std::string heading;
    if (from == "tm1") {
        Int k = parse_int(char_text);
        TorusChar L = torus_char(fp, k);
        if (L.k != k)
            std::cerr << "note: torus character " << k << " reduced to " << L.k << "\n";
        d = ind_tm1_decompose(L);
        inputs["subgroup"] = "tm1";
        inputs["character"] = std::to_string(L.k);
        heading = "Ind from the nonsplit torus, character " + std::to_string(L.k);
    } else if (from == "t1") {
        auto [a, b] = parse_int_pair(char_text);
        MultChar alpha = mult_char(fp, a), beta = mult_char(fp, b);
        if (alpha.a != a || beta.a != b)
            std::cerr << "note: character pair reduced to " << alpha.a << "," << beta.a << "\n";
        d = ind_t1_decompose(alpha, beta);
        inputs["subgroup"] = "t1";
        inputs["character"] = std::to_string(alpha.a) + "," + std::to_string(beta.a);
        heading = "Ind from the split torus, character " + std::to_string(alpha.a) + "," +
                  std::to_string(beta.a);
    } else {
        Int rho = parse_int(char_text);
        MultChar r = mult_char(fp, rho);
        if (r.a != rho)
            std::cerr << "note: character " << rho << " reduced to " << r.a << "\n";
        d = ind_zu_decompose(r);
        inputs["subgroup"] = "zu";
        inputs["character"] = std::to_string(r.a);
        heading = "Ind from scalars times unipotents, character " + std::to_string(r.a);
    }
    if (format == "json") {
        std::cout << decomposition_json(fp, inputs, d).dump(2) << "\n";
        return;
    }
    std::cout << "q = " << fp.q << "\n" << heading << "\n";
    print_decomposition_text(d);
}

void run_table(const FieldParams& fp, const std::string& format) {
    CharacterTable table(fp);
    if (format == "json") {
        json out;
        out["q"] = fp.q;
        json irreps = json::array();
        for (const IrrepLabel& r : table.irreps()) irreps.push_back(to_string(r));
        out["irreps"] = irreps;
        json classes = json::array();
        for (const ClassData& cd : table.classes()) {
            json c;
            c["label"] = to_string(cd.label);
            c["size"] = cd.size;
            classes.push_back(c);
        }
        out["classes"] = classes;
        json values = json::array();
        for (std::size_t r = 0; r < table.irreps().size(); ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < table.classes().size(); ++c)
                row.push_back(cell_string(table.value(r, c)));
            values.push_back(row);
        }
        out["values"] = values;
        out["root_order"] = fp.m2;
        std::cout << out.dump(2) << "\n";
        return;
    }
    // csv: header of quoted class labels, one quoted irrep label per row.
    std::cout << "\"irrep\"";
    for (const ClassData& cd : table.classes()) std::cout << ",\"" << to_string(cd.label) << "\"";
    std::cout << "\n";
    for (std::size_t r = 0; r < table.irreps().size(); ++r) {
        std::cout << "\"" << to_string(table.irreps()[r]) << "\"";
        for (std::size_t c = 0; c < table.classes().size(); ++c)
            std::cout << ",\"" << cell_string(table.value(r, c)) << "\"";
        std::cout << "\n";
    }
}

void run_selfdual(const FieldParams& fp, const std::string& format) {
    std::vector<IrrepLabel> sd = self_dual_classify(fp);
    if (format == "json") {
        json out;
        out["q"] = fp.q;
        json list = json::array();
        for (const IrrepLabel& r : sd) list.push_back(to_string(r));
        out["self_dual"] = list;
        out["count"] = static_cast<Int>(sd.size());
        std::cout << out.dump(2) << "\n";
        return;
    }
    std::cout << "q = " << fp.q << ", " << sd.size() << " self-dual irreducibles\n";
    for (const IrrepLabel& r : sd) std::cout << "  " << to_string(r) << "\n";
}

// Each suite prints one summary line; any mismatch throws VerificationFailure.

void verify_counts(const FieldParams& fp) {
    std::vector<IrrepLabel> irreps = enumerate_irreps(fp);
    std::vector<ClassData> classes = enumerate_classes(fp);
    if (static_cast<Int>(irreps.size()) != fp.q * fp.q - 1 ||
        irreps.size() != classes.size())
        throw VerificationFailure("irrep/class counts are off");
    Int sum_sq = 0, sum_sizes = 0;
    for (const IrrepLabel& r : irreps) sum_sq += dimension(r) * dimension(r);
    for (const ClassData& cd : classes) sum_sizes += cd.size;
    if (sum_sq != fp.group_order || sum_sizes != fp.group_order)
        throw VerificationFailure("dimension or class-size mass does not fill the group");
    std::cout << "counts: ok (" << irreps.size() << " irreps, " << classes.size()
              << " classes, mass " << fp.group_order << ")\n";
}

void verify_orthogonality(const OracleContext& ctx) {
    std::size_t n = ctx.table.irreps().size();
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = r; s < n; ++s)
            if (ctx.oracle.row_inner(r, s) != (r == s ? 1 : 0))
                throw VerificationFailure("row orthogonality fails at (" + std::to_string(r) +
                                          "," + std::to_string(s) + ")");
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t d = c; d < n; ++d) {
            Int want = (c == d) ? ctx.fp.group_order / ctx.table.classes()[c].size : 0;
            if (ctx.oracle.column_inner(c, d) != want)
                throw VerificationFailure("column orthogonality fails at (" +
                                          std::to_string(c) + "," + std::to_string(d) + ")");
        }
    }
    std::cout << "orthogonality: ok (" << n << "x" << n << " table)\n";
}

void verify_tensor(const OracleContext& ctx) {
    const std::vector<IrrepLabel>& all = ctx.table.irreps();
    Int pairs = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i; j < all.size(); ++j) {
            Decomposition closed = tensor_decompose(all[i], all[j]);
            if (ctx.oracle.tensor_decompose(all[i], all[j]) != closed)
                throw VerificationFailure("tensor decomposition differs for " +
                                          to_string(all[i]) + " x " + to_string(all[j]));
            if (pantoja_tensor(all[i], all[j]) != closed)
                throw VerificationFailure("induction route differs for " + to_string(all[i]) +
                                          " x " + to_string(all[j]));
            ++pairs;
        }
    }
    std::cout << "tensor: ok (" << pairs << " products, both routes)\n";
}

void verify_induction(const OracleContext& ctx) {
    const FieldParams& fp = ctx.fp;
    Int checked = 0;
    for (Int k = 0; k < fp.m2; ++k) {
        TorusChar L = torus_char(fp, k);
        if (ctx.oracle.aniso_torus_decompose(L) != ind_tm1_decompose(L))
            throw VerificationFailure("nonsplit induction differs at k=" + std::to_string(k));
        ++checked;
    }
    for (Int a = 0; a < fp.m1; ++a) {
        for (Int b = 0; b < fp.m1; ++b) {
            MultChar alpha = mult_char(fp, a), beta = mult_char(fp, b);
            if (ctx.oracle.split_torus_decompose(alpha, beta) != ind_t1_decompose(alpha, beta))
                throw VerificationFailure("split induction differs at (" + std::to_string(a) +
                                          "," + std::to_string(b) + ")");
            ++checked;
        }
    }
    for (Int rho = 0; rho < fp.m1; ++rho) {
        MultChar r = mult_char(fp, rho);
        if (ctx.oracle.zu_decompose(r) != ind_zu_decompose(r))
            throw VerificationFailure("whittaker-type induction differs at rho=" +
                                      std::to_string(rho));
        ++checked;
    }
    std::cout << "induction: ok (" << checked << " inducing characters)\n";
}

void verify_selfdual(const OracleContext& ctx) {
    const FieldParams& fp = ctx.fp;
    std::vector<IrrepLabel> listed = self_dual_classify(fp);
    std::vector<IrrepLabel> swept;
    IrrepLabel triv = one_dim(mult_char(fp, 0));
    for (const IrrepLabel& r : enumerate_irreps(fp)) {
        bool by_dual = (dual(r) == r);
        bool by_square = ctx.oracle.tensor_multiplicity(r, r, triv) == 1;
        if (by_dual != by_square)
            throw VerificationFailure("duality and trivial-in-square disagree at " +
                                      to_string(r));
        if (by_dual) swept.push_back(r);
    }
    if (listed != swept)
        throw VerificationFailure("closed-form self-dual list does not match the sweep");
    std::cout << "selfdual: ok (" << listed.size() << " of " << fp.q * fp.q - 1 << ")\n";
}

void verify_unique(const FieldParams& fp) {
    UniqueDecompositionReport report = unique_decomposition_sweep(fp);
    if (!report.clean()) {
        std::string msg = "unique-decomposition sweep found violations:";
        for (const std::string& v : report.violations) msg += "\n  " + v;
        throw VerificationFailure(msg);
    }
    std::cout << "unique: ok (" << report.pairs_checked << " pairs, "
              << report.groups.size() << " collision groups)\n";
}

void run_verify(const FieldParams& fp, const std::string& suite, std::uint64_t seed) {
    if (fp.q > kMaxVerifyQ)
        throw Error("verification sweeps are supported for q <= " +
                    std::to_string(kMaxVerifyQ));
    bool all = suite == "all";
    std::optional<OracleContext> ctx;
    if (all || suite == "tensor" || suite == "induction" || suite == "orthogonality" ||
        suite == "selfdual")
        ctx.emplace(fp, seed);

    if (all || suite == "counts") verify_counts(fp);
    if (all || suite == "orthogonality") verify_orthogonality(*ctx);
    if (all || suite == "tensor") verify_tensor(*ctx);
    if (all || suite == "induction") verify_induction(*ctx);
    if (all || suite == "selfdual") verify_selfdual(*ctx);
    if (all || suite == "unique") verify_unique(fp);
    if (ctx && ctx->eval.disagreement_count() != 0)
        throw VerificationFailure("modular evaluations disagreed");
    std::cout << "verify: all checks passed\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tensor-product and induced-representation decompositions for GL2 "
                 "over a small odd finite field"};
    app.require_subcommand(1);
    std::uint64_t seed = ModularEvaluator::kDefaultSeed;
    app.add_option("--seed", seed, "Seed for the modular evaluator's root search")
        ->capture_default_str();

    Int q = 0;
    std::string label1, label2;
    std::string method = "formula", format = "text", from, char_text, suite = "all";

    CLI::App* irreps_cmd = app.add_subcommand("irreps", "List all irreducibles");
    irreps_cmd->add_option("--q", q, "Field size, an odd prime power")->required();
    irreps_cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    irreps_cmd->callback([&] { run_irreps(params_for_q(q), format); });

    CLI::App* tensor_cmd =
        app.add_subcommand("tensor", "Decompose the tensor product of two irreducibles");
    tensor_cmd->add_option("label1", label1, "First factor, e.g. st:0 or ps:0,1")->required();
    tensor_cmd->add_option("label2", label2, "Second factor")->required();
    tensor_cmd->add_option("--q", q, "Field size, an odd prime power")->required();
    tensor_cmd->add_option("--method", method, "formula, pantoja, or oracle")
        ->check(CLI::IsMember({"formula", "pantoja", "oracle"}));
    tensor_cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    tensor_cmd->callback(
        [&] { run_tensor(params_for_q(q), label1, label2, method, format, seed); });

    CLI::App* induce_cmd =
        app.add_subcommand("induce", "Decompose an induced representation");
    induce_cmd->add_option("--q", q, "Field size, an odd prime power")->required();
    induce_cmd->add_option("--from", from, "Inducing subgroup: t1, tm1, or zu")
        ->required()
        ->check(CLI::IsMember({"t1", "tm1", "zu"}));
    induce_cmd
        ->add_option("--char", char_text,
                     "Inducing character: 'a,b' for t1, 'k' for tm1, 'rho' for zu")
        ->required();
    induce_cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    induce_cmd->callback([&] { run_induce(params_for_q(q), from, char_text, format); });

    CLI::App* table_cmd = app.add_subcommand("table", "Print the exact character table");
    table_cmd->add_option("--q", q, "Field size, an odd prime power")->required();
    table_cmd->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    table_cmd->callback([&] {
        if (format == "text") format = "csv";
        run_table(params_for_q(q), format);
    });

    CLI::App* selfdual_cmd =
        app.add_subcommand("selfdual", "List the self-dual irreducibles");
    selfdual_cmd->add_option("--q", q, "Field size, an odd prime power")->required();
    selfdual_cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    selfdual_cmd->callback([&] { run_selfdual(params_for_q(q), format); });

    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "Check the closed forms against the character-table verifier");
    verify_cmd->add_option("--q", q, "Field size, an odd prime power")->required();
    verify_cmd
        ->add_option("--suite", suite,
                     "all, tensor, induction, orthogonality, selfdual, unique, or counts")
        ->check(CLI::IsMember(
            {"all", "tensor", "induction", "orthogonality", "selfdual", "unique", "counts"}));
    verify_cmd->callback([&] { run_verify(params_for_q(q), suite, seed); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const VerificationFailure& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
