// Command-line front end: orbit and table reproduction, diagram reports,
// and exact geometry checks on configuration files.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "octad/collision_graph.hpp"
#include "octad/completion.hpp"
#include "octad/config_io.hpp"
#include "octad/errors.hpp"
#include "octad/linking.hpp"
#include "octad/oval_count.hpp"
#include "octad/sample_octads.hpp"
#include "octad/theta_diagram.hpp"

using json = nlohmann::ordered_json;
using namespace octad;

namespace {

const char* kCensusWarning =
    "even-class census: (alpha,beta) ranges over {0,2,4}x{0,3,4} except (4,3), and (2,4) "
    "appears for both parities; any statement placing the even exception at (2,4) disagrees "
    "with this exhaustive enumeration";

const char* kMonomialOrder =
    "t0^4,t0^3*t1,t0^3*t2,t0^2*t1^2,t0^2*t1*t2,t0^2*t2^2,t0*t1^3,t0*t1^2*t2,t0*t1*t2^2,"
    "t0*t2^3,t1^4,t1^3*t2,t1^2*t2^2,t1*t2^3,t2^4";

std::string class_name(int alpha, int beta)
{
    return std::to_string(alpha) + std::to_string(beta);
}

json edges_json(const diag::GammaGraph& g)
{
    json edges = json::array();
    for (const auto& e : g.edges)
        edges.push_back(std::to_string(int(e.u)) + "-" + std::to_string(int(e.v)) + ":" + e.tag);
    return edges;
}

json points_json(const std::vector<geo::ProjPoint>& pts)
{
    json out = json::array();
    for (const auto& p : pts) {
        json row = json::array();
        for (const auto& c : p.c) row.push_back(c.get_str());
        out.push_back(row);
    }
    return out;
}

struct Report {
    json j;
    std::vector<std::string> warnings;
    std::string tsv;
    std::string text;
};

// the even classes in the table layout order: rows beta = 4, 3, 0
const std::vector<std::pair<int, int>> kTableOrder = {
    {0, 4}, {2, 4}, {4, 4}, {0, 3}, {2, 3}, {0, 0}, {2, 0}, {4, 0}};

diag::ThetaDiagram class_rep(int alpha, int beta)
{
    for (const auto& o : diag::enumerate_orbits())
        if (o.label.parity == 0 && o.label.alpha == alpha && o.label.beta == beta) return o.rep;
    throw BadInput("no even class " + class_name(alpha, beta));
}

Report cmd_orbits()
{
    Report r;
    r.warnings.push_back(kCensusWarning);
    json rows = json::array();
    std::string tsv = "rep\tsize\talpha\tbeta\tparity\n";
    std::string text = "S4 orbits of the 64 diagrams (rep, size, alpha, beta, parity):\n";
    for (const auto& o : diag::enumerate_orbits()) {
        json row;
        row["rep"] = o.rep.bits();
        row["size"] = o.members.size();
        row["alpha"] = o.label.alpha;
        row["beta"] = o.label.beta;
        row["parity"] = o.label.parity == 0 ? "even" : "odd";
        rows.push_back(row);
        tsv += o.rep.bits() + "\t" + std::to_string(o.members.size()) + "\t" + std::to_string(o.label.alpha) +
               "\t" + std::to_string(o.label.beta) + "\t" + (o.label.parity == 0 ? "even" : "odd") + "\n";
        text += "  " + o.rep.bits() + "  size " + std::to_string(o.members.size()) + "  (" +
                std::to_string(o.label.alpha) + "," + std::to_string(o.label.beta) + ") " +
                (o.label.parity == 0 ? "even" : "odd") + "\n";
    }
    r.j["orbits"] = rows;
    r.tsv = tsv;
    r.text = text;
    return r;
}

Report cmd_tables()
{
    Report r;
    r.warnings.push_back(kCensusWarning);
    json t1 = json::array(), t2 = json::array(), t3 = json::array();
    std::string text;
    int total = 0;
    std::string tsv = "class\tgamma_edges\tmatches_reference\tgroup\torbits\n";
    for (auto [alpha, beta] : kTableOrder) {
        auto d = class_rep(alpha, beta);
        auto phi = bip::build_phi(d.q);
        auto gamma = diag::gamma_graph(d, phi);
        auto mono = diag::monodromy_group(d, phi);
        int orbits = diag::vertex_orbits(d, phi);
        total += orbits;
        bool match = diag::decorated_isomorphic(gamma, diag::reference_gamma(alpha, beta));

        json e1;
        e1["class"] = class_name(alpha, beta);
        e1["edges"] = edges_json(gamma);
        e1["matches_reference"] = match;
        t1.push_back(e1);
        json e2;
        e2["class"] = class_name(alpha, beta);
        e2["group"] = mono.name;
        t2.push_back(e2);
        json e3;
        e3["class"] = class_name(alpha, beta);
        e3["orbits"] = orbits;
        t3.push_back(e3);

        std::string edge_list;
        for (const auto& e : gamma.edges)
            edge_list += (edge_list.empty() ? "" : ",") + std::to_string(int(e.u)) + "-" + std::to_string(int(e.v)) + ":" + e.tag;
        tsv += class_name(alpha, beta) + "\t" + (edge_list.empty() ? "-" : edge_list) + "\t" +
               (match ? "yes" : "no") + "\t" + mono.name + "\t" + std::to_string(orbits) + "\n";
        text += "O" + class_name(alpha, beta) + ": gamma {" + edge_list + "} " +
                (match ? "(reference type)" : "(MISMATCH vs reference)") + ", group " + mono.name +
                ", orbits " + std::to_string(orbits) + "\n";
    }
    r.j["table1_gamma"] = t1;
    r.j["table2_groups"] = t2;
    r.j["table3_orbits"] = t3;
    r.j["marked_classes_total"] = total;
    r.tsv = tsv + "total\t\t\t\t" + std::to_string(total) + "\n";
    r.text = text + "marked classes total: " + std::to_string(total) + "\n";
    return r;
}

Report cmd_adjacency()
{
    Report r;
    auto g = diag::adjacency_graph();
    json edges = json::array();
    std::string tsv = "from\tto\n", text = "class adjacency (one wall-crossing move):\n";
    for (const auto& e : g.edges) {
        std::string a = class_name(e[0][0], e[0][1]), b = class_name(e[1][0], e[1][1]);
        edges.push_back(a + "-" + b);
        tsv += a + "\t" + b + "\n";
        text += "  O" + a + " -- O" + b + "\n";
    }
    json loops = json::array();
    for (const auto& l : g.self_loops) {
        loops.push_back(class_name(l[0], l[1]));
        tsv += class_name(l[0], l[1]) + "\t" + class_name(l[0], l[1]) + "\n";
        text += "  O" + class_name(l[0], l[1]) + " -- itself\n";
    }
    r.j["edges"] = edges;
    r.j["self_loops"] = loops;
    r.tsv = tsv;
    r.text = text;
    return r;
}

Report cmd_diagram(const std::string& bits)
{
    Report r;
    auto d = diag::ThetaDiagram::from_bits(bits);
    auto label = diag::class_label(d);
    r.j["matrix"] = d.bits();
    r.j["alpha"] = label.alpha;
    r.j["beta"] = label.beta;
    r.j["parity"] = label.parity == 0 ? "even" : "odd";
    json coloring;
    {
        json ovals = json::array(), bridges = json::object();
        for (int i = 0; i < 4; ++i) ovals.push_back(d.oval(i));
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                bridges[std::to_string(i) + std::to_string(j)] = d.bridge(i, j);
        coloring["ovals"] = ovals;
        coloring["bridges"] = bridges;
    }
    r.j["coloring"] = coloring;
    for (const auto& o : diag::enumerate_orbits())
        if (std::find(o.members.begin(), o.members.end(), d) != o.members.end())
            r.j["orbit_rep"] = o.rep.bits();

    std::string text = "matrix " + d.bits() + ": class (" + std::to_string(label.alpha) + "," +
                       std::to_string(label.beta) + "), " + (label.parity == 0 ? "even" : "odd") + "\n";
    std::string tsv = "key\tvalue\nmatrix\t" + d.bits() + "\nclass\t" + class_name(label.alpha, label.beta) +
                      "\nparity\t" + (label.parity == 0 ? std::string("even") : std::string("odd")) + "\n";

    if (label.parity == 0) {
        json moves = json::array();
        for (const auto& m : diag::admissible_moves(d)) {
            auto target = diag::class_label(diag::apply_move(d, m));
            json mv;
            mv["kind"] = m.kind == diag::Move::Kind::BlackEdge ? "black-edge" : "black-vertex";
            mv["at"] = m.kind == diag::Move::Kind::BlackEdge
                           ? std::to_string(m.i) + std::to_string(m.j)
                           : std::to_string(m.i);
            mv["target_class"] = class_name(target.alpha, target.beta);
            moves.push_back(mv);
        }
        r.j["moves"] = moves;
        auto phi = bip::build_phi(d.q);
        auto gamma = diag::gamma_graph(d, phi);
        auto mono = diag::monodromy_group(d, phi);
        r.j["gamma_edges"] = edges_json(gamma);
        r.j["monodromy_group"] = mono.name;
        r.j["vertex_orbits"] = diag::vertex_orbits(d, phi);
        text += "moves: " + std::to_string(moves.size()) + ", gamma edges: " + std::to_string(gamma.edges.size()) +
                ", monodromy " + mono.name + "\n";
        tsv += "monodromy\t" + mono.name + "\n";
    } else {
        r.warnings.push_back("odd diagram: moves, collision graph and monodromy are defined for even diagrams only");
    }
    r.tsv = tsv;
    r.text = text;
    return r;
}

Report cmd_m1()
{
    Report r;
    auto rep = diag::m1_diagram_checks();
    json out = json::array();
    std::string text, tsv = "diagram\tpairs_opposite\tsymmetry_order\tgamma_matches\n";
    for (int k = 0; k < 2; ++k) {
        const auto& d = rep.diagram[static_cast<std::size_t>(k)];
        json e;
        e["diagram"] = k + 1;
        e["bridge_pairs_opposite"] = d.bridge_pairs_opposite;
        e["symmetry_order"] = d.symmetry_order;
        e["gamma_edges"] = edges_json(d.gamma);
        e["gamma_matches_reference"] = d.gamma_matches_reference;
        out.push_back(e);
        tsv += std::to_string(k + 1) + "\t" + (d.bridge_pairs_opposite ? "yes" : "no") + "\t" +
               std::to_string(d.symmetry_order) + "\t" + (d.gamma_matches_reference ? "yes" : "no") + "\n";
        text += "diagram " + std::to_string(k + 1) + ": pairs opposite " +
                (d.bridge_pairs_opposite ? "yes" : "no") + ", symmetry order " +
                std::to_string(d.symmetry_order) + ", gamma " +
                (d.gamma_matches_reference ? "matches reference" : "MISMATCH") + "\n";
    }
    r.j["diagrams"] = out;
    r.tsv = tsv;
    r.text = text;
    return r;
}

geo::NetOfQuadrics net_of(const std::vector<geo::ProjPoint>& pts)
{
    if (pts.size() == 7) return geo::net_through(geo::expect_points<7>(pts));
    if (pts.size() == 8) {
        for (int skip = 7; skip >= 0; --skip) {
            std::array<geo::ProjPoint, 7> seven;
            int n = 0;
            for (int k = 0; k < 8; ++k)
                if (k != skip) seven[static_cast<std::size_t>(n++)] = pts[static_cast<std::size_t>(k)];
            try {
                return geo::net_through(seven);
            } catch (const DegenerateInput&) {
                if (skip == 0) throw;
            }
        }
    }
    throw BadInput("this command needs a 7- or 8-point configuration");
}

Report cmd_octad(const std::string& op, const std::string& path, int depth)
{
    Report r;
    auto pts = geo::read_config_file(path);
    r.j["file"] = path;
    r.j["points"] = points_json(pts);

    if (op == "verify") {
        auto rep = geo::verify_octad(geo::expect_points<8>(pts));
        r.j["all_distinct"] = rep.all_distinct;
        r.j["eval_rank"] = rep.eval_rank;
        json quads = json::array();
        for (const auto& q : rep.coplanar_quads)
            quads.push_back({q[0], q[1], q[2], q[3]});
        r.j["coplanar_quadruples"] = quads;
        r.j["m_octad"] = rep.m_octad;
        r.j["classification"] = geo::to_string(rep.cls);
        r.text = std::string("classification: ") + geo::to_string(rep.cls) + " (" +
                 std::to_string(rep.coplanar_quads.size()) + " coplanar quadruples, evaluation rank " +
                 std::to_string(rep.eval_rank) + ")\n";
        r.tsv = "key\tvalue\nclassification\t" + std::string(geo::to_string(rep.cls)) + "\neval_rank\t" +
                std::to_string(rep.eval_rank) + "\ncoplanar_quadruples\t" + std::to_string(rep.coplanar_quads.size()) + "\n";
    } else if (op == "complete") {
        auto res = geo::complete_octad_full(geo::expect_points<7>(pts));
        json pt = json::array();
        for (const auto& c : res.point.c) pt.push_back(c.get_str());
        r.j["eighth_point"] = pt;
        json elim = json::array();
        for (const auto& c : res.eliminant) elim.push_back(c.get_str());
        r.j["eliminant_monic_low_to_high"] = elim;
        std::string ptstr;
        for (const auto& c : res.point.c) ptstr += (ptstr.empty() ? "" : " ") + c.get_str();
        r.text = "eighth point: " + ptstr + "\n";
        r.tsv = "key\tvalue\neighth_point\t" + ptstr + "\n";
    } else if (op == "hessian") {
        auto h = geo::hessian(net_of(pts)).canonical();
        json cs = json::array();
        for (const auto& c : h.c) cs.push_back(c.get_num().get_str());
        r.j["monomial_order"] = kMonomialOrder;
        r.j["coefficients"] = cs;
        std::string line;
        for (const auto& c : h.c) line += (line.empty() ? "" : " ") + c.get_num().get_str();
        r.text = "hessian coefficients (" + std::string(kMonomialOrder) + "):\n" + line + "\n";
        r.tsv = "coefficients\t" + line + "\n";
    } else if (op == "chirality") {
        auto signs = geo::octad_signs(geo::expect_points<8>(pts));
        r.j["common_sign"] = signs.common_sign;
        json per = json::array();
        for (int s : signs.per_point) per.push_back(s);
        r.j["per_point_signs"] = per;
        r.text = "common sign: " + std::string(signs.common_sign > 0 ? "+1" : "-1") + " (all eight agree)\n";
        r.tsv = "key\tvalue\ncommon_sign\t" + std::to_string(signs.common_sign) + "\n";
    } else if (op == "ovals") {
        auto h = geo::hessian(net_of(pts));
        auto c = geo::count_ovals(h, depth);
        r.j["depth"] = c.depth;
        r.j["count"] = c.count;
        r.j["stabilized"] = c.stabilized;
        if (!c.stabilized) r.warnings.push_back("count did not stabilize; rerun with a larger --depth");
        r.text = "ovals: " + std::to_string(c.count) + (c.stabilized ? " (stabilized)" : " (NOT stabilized)") +
                 " at depth " + std::to_string(c.depth) + "\n";
        r.tsv = "key\tvalue\ncount\t" + std::to_string(c.count) + "\nstabilized\t" + (c.stabilized ? "yes" : "no") + "\n";
    } else {
        throw BadInput("unknown octad operation '" + op + "'");
    }
    return r;
}

void emit(const Report& r, const std::string& command, const std::string& format)
{
    if (format == "json") {
        json out;
        out["command"] = command;
        out["results"] = r.j;
        out["warnings"] = r.warnings;
        out["status"] = 0;
        std::cout << out.dump(2) << "\n";
    } else if (format == "tsv") {
        std::cout << r.tsv;
        for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
    } else {
        std::cout << r.text;
        for (const auto& w : r.warnings) std::cout << "warning: " << w << "\n";
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact classification and verification engine for 8-point quadric configurations"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "tsv", "text"}));

    auto* orbits = app.add_subcommand("orbits", "the 11 relabeling orbits of the 64 diagrams");
    auto* tables = app.add_subcommand("tables", "collision graphs, monodromy groups and orbit counts per class");
    auto* adjacency = app.add_subcommand("adjacency", "class adjacency under single wall-crossings");
    auto* diagram = app.add_subcommand("diagram", "full report for one 6-bit diagram matrix");
    std::string bits;
    diagram->add_option("bits", bits, "row-major matrix bits, e.g. 000101")->required();
    auto* m1 = app.add_subcommand("m1-check", "fixed-data checks for the two 3-oval diagrams");

    auto* octad = app.add_subcommand("octad", "geometry operations on a configuration file");
    std::string op, path;
    int depth = 9;
    octad->add_option("op", op, "verify|complete|hessian|chirality|ovals")
        ->required()
        ->check(CLI::IsMember({"verify", "complete", "hessian", "chirality", "ovals"}));
    octad->add_option("file", path, "configuration file")->required();
    octad->add_option("--depth", depth, "grid depth for ovals (cells per side = 2^depth)")
        ->check(CLI::Range(1, 12));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (orbits->parsed()) emit(cmd_orbits(), "orbits", format);
        else if (tables->parsed()) emit(cmd_tables(), "tables", format);
        else if (adjacency->parsed()) emit(cmd_adjacency(), "adjacency", format);
        else if (diagram->parsed()) emit(cmd_diagram(bits), "diagram", format);
        else if (m1->parsed()) emit(cmd_m1(), "m1-check", format);
        else if (octad->parsed()) emit(cmd_octad(op, path, depth), "octad " + op, format);
    } catch (const Error& e) {
        json out;
        out["status"] = 1;
        out["error"] = e.code();
        out["message"] = e.what();
        std::cout << out.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        json out;
        out["status"] = 1;
        out["error"] = "Internal";
        out["message"] = e.what();
        std::cout << out.dump(2) << "\n";
        return 1;
    }
    return 0;
}
