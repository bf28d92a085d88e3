// Command-line front end: reads a JSON system description and prints mixed
// volumes, bound reports or Nullstellensatz certificates.

#include <spnull/bounds.hpp>
#include <spnull/certificate.hpp>
#include <spnull/io.hpp>
#include <spnull/mixed_volume.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace spnull;

enum Exit
{
    ok = 0,
    usage = 1,
    invalid = 2,
    infeasible = 3,
    cross_check = 4,
};

struct CommonFlags
{
    std::string input;
    bool json = false;
    unsigned jobs = 1;
};

void add_common(CLI::App* cmd, CommonFlags& f)
{
    cmd->add_option("--input", f.input, "system description (JSON); stdin when omitted");
    cmd->add_flag("--json", f.json, "machine-readable JSON output");
    cmd->add_option("--jobs", f.jobs, "worker threads")->check(CLI::PositiveNumber);
}

SystemFile read_system(const std::string& path)
{
    std::stringstream buf;
    if (path.empty() || path == "-") {
        buf << std::cin.rdbuf();
    }
    else {
        std::ifstream in(path);
        if (!in)
            throw InvalidInput("cannot read '" + path + "'");
        buf << in.rdbuf();
    }
    return parse_system(buf.str());
}

void print_row(const std::string& key, const std::string& value)
{
    std::cout << key;
    for (std::size_t i = key.size(); i < 22; ++i)
        std::cout << ' ';
    std::cout << value << "\n";
}

std::string join(const std::vector<std::string>& parts)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i)
        out += (i ? ", " : "") + parts[i];
    return out;
}

template <class T>
std::string list_text(const std::vector<T>& v)
{
    std::vector<std::string> parts;
    for (const auto& x : v) {
        std::ostringstream os;
        os << x;
        parts.push_back(os.str());
    }
    return "[" + join(parts) + "]";
}

// ------------------------------------------------------------------ mv

int cmd_mv(const CommonFlags& f, bool oracle, std::uint64_t seed)
{
    SystemFile sf = read_system(f.input);
    SupportTuple t(sf.n, sf.supports);
    const Integer mv = mixed_volume(t, {f.jobs});
    std::optional<Integer> check;
    if (oracle)
        check = mixed_volume_oracle(t, seed);
    if (f.json) {
        Json j{{"mixed_volume", integer_json(mv)}};
        if (check)
            j["oracle"] = {{"seed", seed}, {"value", integer_json(*check)}};
        std::cout << dump(j);
    }
    else {
        std::cout << mv << "\n";
    }
    if (check && *check != mv) {
        std::cerr << "error: oracle disagrees: inclusion-exclusion " << mv << ", subdivision " << *check << "\n";
        return cross_check;
    }
    return ok;
}

// ------------------------------------------------------------------ volume

int cmd_volume(const CommonFlags& f)
{
    SystemFile sf = read_system(f.input);
    Json list = Json::array();
    for (std::size_t i = 0; i < sf.supports.size(); ++i) {
        RationalPolytope p = convex_hull(sf.supports[i]);
        const Integer nv = normalized_volume(sf.supports[i]);
        if (f.json) {
            list.push_back({{"volume", p.volume().get_str()},
                            {"normalized_volume", integer_json(nv)},
                            {"affine_dim", p.affine_dim()},
                            {"vertices", polytope_json(p)}});
        }
        else {
            std::vector<std::string> verts;
            for (const auto& v : p.vertices())
                verts.push_back(to_string(v));
            std::cout << "support " << i + 1 << "\n";
            print_row("  volume", p.volume().get_str());
            print_row("  normalized volume", nv.get_str());
            print_row("  affine dimension", std::to_string(p.affine_dim()));
            print_row("  vertices", join(verts));
        }
    }
    if (f.json)
        std::cout << dump(Json{{"volumes", list}});
    return ok;
}

// ------------------------------------------------------------------ bounds

int cmd_bounds(const CommonFlags& f, bool noether, bool compare, bool unmixed)
{
    SystemFile sf = read_system(f.input);
    BoundReport r = bound_report(sf.spec(), {compare, unmixed}, {f.jobs});
    std::string name;
    Integer value;
    std::string caps;
    if (noether) {
        name = unmixed ? "unmixed_noether" : "noether_mixed";
        value = unmixed ? r.unmixed_noether : r.noether_mixed;
        caps = "mu";
    }
    else {
        name = unmixed ? "unmixed_nss_degree" : "mixed_nss";
        value = unmixed ? r.unmixed_nss_degree : r.mixed_nss;
        caps = unmixed ? "deg(g_i f_i)" : r.mixed_nss_caps;
    }
    if (f.json) {
        Json j = bound_report_json(r);
        j["selected"] = {{"name", name}, {"value", integer_json(value)}, {"caps", caps}};
        std::cout << dump(j);
        return ok;
    }
    print_row(name, value.get_str() + "  (bounds " + caps + ")");
    print_row("n, s, d", std::to_string(r.n) + ", " + std::to_string(r.s) + ", " + std::to_string(r.d));
    print_row("unmixed_noether", r.unmixed_noether.get_str());
    print_row("unmixed_nss_degree", r.unmixed_nss_degree.get_str());
    print_row("newton cap", r.newton_multiplier.get_str() + " * " + to_string(*r.newton_base));
    if (r.mixed_evaluated) {
        print_row("M", r.M.get_str());
        print_row("M_j", list_text(r.M_j));
        print_row("d_j", list_text(r.d_j));
        std::vector<std::string> deltas;
        for (const auto& dj : r.delta_j)
            deltas.push_back(dj ? std::to_string(*dj) : "-");
        print_row("delta_j", "[" + join(deltas) + "]");
        print_row("mixed_nss", r.mixed_nss.get_str() + "  (bounds " + r.mixed_nss_caps + ")");
        print_row("argmin", r.argmin_is_dM ? "d*M" : "d_j*delta_j*M_j, j = " + std::to_string(r.argmin_j));
        if (r.nss_subset)
            print_row("nss subset", list_text(*r.nss_subset));
        print_row("noether_mixed", r.noether_mixed.get_str());
        if (r.noether_subset)
            print_row("noether subset", list_text(*r.noether_subset));
    }
    for (const auto& [cname, c] : r.comparators)
        print_row(cname, c.value.get_str() + (c.valid ? "" : "  (hypotheses not met)") + "  " + c.note);
    for (const auto& note : r.notes)
        std::cout << "note: " << note << "\n";
    return ok;
}

// ------------------------------------------------------------------ certificate

std::int64_t to_cap(const Integer& v)
{
    if (!v.fits_slong_p())
        throw LimitExceeded("degree cap " + v.get_str() + " is too large for a certificate search");
    return v.get_si();
}

int cmd_certificate(const CommonFlags& f, const std::string& cap_text, const std::string& mode_text, bool minimal)
{
    SystemFile sf = read_system(f.input);
    if (!sf.polynomials)
        throw InvalidInput("the certificate command needs 'polynomials' in the input");
    const auto& fs = *sf.polynomials;
    if (mode_text != "total-degree" && mode_text != "newton")
        throw CLI::ValidationError("--mode", "expected total-degree or newton");
    const SearchMode mode = mode_text == "newton" ? SearchMode::newton : SearchMode::total_degree;
    if (minimal && mode == SearchMode::newton)
        throw CLI::ValidationError("--minimal", "only available in total-degree mode");

    const DegreeCap bound = certificate_degree_cap(sf.spec(), {f.jobs});
    const bool automatic = cap_text == "auto";
    std::int64_t cap = 0;
    if (automatic) {
        cap = to_cap(bound.cap);
    }
    else {
        try {
            std::size_t used = 0;
            cap = std::stoll(cap_text, &used);
            if (used != cap_text.size() || cap < 0)
                throw std::invalid_argument(cap_text);
        }
        catch (const std::exception&) {
            throw CLI::ValidationError("--cap", "expected a nonnegative integer or 'auto'");
        }
    }

    SearchResult res = certificate_search(fs, mode, cap);
    std::optional<MinimalResult> least;
    if (minimal && res.certificate)
        least = minimal_certificate_degree(fs, cap);

    if (!res.certificate) {
        std::string msg;
        bool proper = false;
        if (mode == SearchMode::newton) {
            proper = true;
            msg = "no certificate with Newton polytopes in " + std::to_string(res.cap_used) +
                  " * conv(A u D_n); the unmixed sparse Nullstellensatz bound guarantees one whenever the "
                  "polynomials have no common zero, so the ideal is proper";
        }
        else if (Integer(static_cast<long>(cap)) >= bound.cap) {
            proper = true;
            msg = "no certificate with deg(g_i f_i) <= " + std::to_string(cap) + "; this cap reaches the " +
                  bound.basis + " (" + bound.cap.get_str() +
                  "), which guarantees a certificate whenever the polynomials have no common zero, so the ideal is proper";
        }
        else {
            msg = "no certificate with deg(g_i f_i) <= " + std::to_string(cap) +
                  "; this does not prove the ideal is proper, since the cap is below the complete bound " +
                  bound.cap.get_str();
        }
        if (f.json)
            std::cout << dump(Json{{"status", "infeasible"},
                                   {"mode", to_string(mode)},
                                   {"cap_used", res.cap_used},
                                   {"bound", integer_json(bound.cap)},
                                   {"bound_basis", bound.basis},
                                   {"ideal_proper", proper},
                                   {"message", msg}});
        else
            std::cout << "infeasible: " << msg << "\n";
        std::cerr << "infeasible at cap " << res.cap_used << ": " << msg << "\n";
        return infeasible;
    }

    const Certificate& cert = *res.certificate;
    const bool verified = verify_certificate(fs, cert);
    if (f.json) {
        Json j = certificate_json(cert);
        j["status"] = "found";
        j["mode"] = to_string(mode);
        j["verified"] = verified;
        j["bound"] = integer_json(bound.cap);
        j["bound_basis"] = bound.basis;
        if (least) {
            Json m{{"max_cap", least->max_cap}};
            m["cap"] = least->cap ? Json(*least->cap) : Json(nullptr);
            m["ratio"] = nullptr;
            if (least->cap && bound.cap != 0)
                m["ratio"] = make_rational(Integer(static_cast<long>(*least->cap)), bound.cap).get_str();
            j["minimal"] = m;
        }
        std::cout << dump(j);
    }
    else {
        for (std::size_t i = 0; i < cert.cofactors.size(); ++i)
            print_row("g" + std::to_string(i + 1), to_string(cert.cofactors[i]));
        print_row("mode", to_string(mode));
        print_row("cap_used", std::to_string(cert.cap_used));
        print_row("max_product_degree", std::to_string(cert.max_product_degree));
        print_row("verified", verified ? "yes" : "no");
        print_row("bound", bound.cap.get_str() + "  (" + bound.basis + ")");
        if (least && least->cap) {
            print_row("minimal cap", std::to_string(*least->cap));
            if (bound.cap != 0)
                print_row("minimal / bound", make_rational(Integer(static_cast<long>(*least->cap)), bound.cap).get_str());
        }
    }
    return verified ? ok : cross_check;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Sparse Nullstellensatz and Noether exponent bounds from mixed volumes"};
    app.require_subcommand(1);

    CommonFlags mv_flags, vol_flags, nss_flags, noe_flags, cert_flags, cmp_flags;
    bool oracle = false;
    std::uint64_t seed = 0;
    bool nss_compare = false, nss_unmixed = false, noe_compare = false, noe_unmixed = false, cmp_unmixed = false;
    std::string cap_text = "auto";
    std::string mode_text = "total-degree";
    bool minimal = false;

    auto* mv = app.add_subcommand("mv", "mixed volume of n supports in dimension n");
    add_common(mv, mv_flags);
    mv->add_flag("--oracle", oracle, "cross-check with the random-lifting subdivision algorithm");
    mv->add_option("--seed", seed, "seed for the oracle's random lifts");

    auto* vol = app.add_subcommand("volume", "volume and vertices of each support's convex hull");
    add_common(vol, vol_flags);

    auto* bounds = app.add_subcommand("bounds", "degree bounds for the system");
    bounds->require_subcommand(1);
    auto* nss = bounds->add_subcommand("nss", "sparse Nullstellensatz degree bound");
    add_common(nss, nss_flags);
    nss->add_flag("--compare", nss_compare, "add classical comparator bounds");
    nss->add_flag("--unmixed", nss_unmixed, "only the unmixed bounds on the union of the supports");
    auto* noe = bounds->add_subcommand("noether", "Noether exponent bound");
    add_common(noe, noe_flags);
    noe->add_flag("--compare", noe_compare, "add classical comparator bounds");
    noe->add_flag("--unmixed", noe_unmixed, "only the unmixed bounds on the union of the supports");

    auto* cmp = app.add_subcommand("compare", "same as 'bounds nss --compare'");
    add_common(cmp, cmp_flags);
    cmp->add_flag("--unmixed", cmp_unmixed, "only the unmixed bounds on the union of the supports");

    auto* cert = app.add_subcommand("certificate", "search for g_i with 1 = sum g_i f_i");
    add_common(cert, cert_flags);
    cert->add_option("--cap", cap_text, "degree cap N, or 'auto' for the complete bound")->capture_default_str();
    cert->add_option("--mode", mode_text, "total-degree or newton")->capture_default_str();
    cert->add_flag("--minimal", minimal, "also report the smallest feasible cap");

    try {
        app.parse(argc, argv);
        if (*mv)
            return cmd_mv(mv_flags, oracle, seed);
        if (*vol)
            return cmd_volume(vol_flags);
        if (*nss)
            return cmd_bounds(nss_flags, false, nss_compare, nss_unmixed);
        if (*noe)
            return cmd_bounds(noe_flags, true, noe_compare, noe_unmixed);
        if (*cmp)
            return cmd_bounds(cmp_flags, false, true, cmp_unmixed);
        if (*cert)
            return cmd_certificate(cert_flags, cap_text, mode_text, minimal);
    }
    catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? ok : usage;
    }
    catch (const InvalidInput& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return invalid;
    }
    catch (const LimitExceeded& e) {
        std::cerr << "limit exceeded: " << e.what() << "\n";
        return infeasible;
    }
    catch (const GenericityFailure& e) {
        std::cerr << "oracle failure: " << e.what() << "\n";
        return cross_check;
    }
    catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return cross_check;
    }
    return usage;
}
