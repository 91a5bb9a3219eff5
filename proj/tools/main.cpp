#include "surfdraw/arrangement.hpp"
#include "surfdraw/crossing.hpp"
#include "surfdraw/drawing.hpp"
#include "surfdraw/enumerate.hpp"
#include "surfdraw/render.hpp"
#include "surfdraw/rotation.hpp"
#include "surfdraw/validate.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace surfdraw;

// Exit codes: 0 success/affirmative, 1 negative verdict or validation
// failure, 2 usage/IO/parse failure.
namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Drawing load(const std::string& path) { return parse_drawing(slurp(path)); }

LabelScheme scheme_of(const std::string& s) {
    if (s == "fixed") return LabelScheme::fixed;
    if (s == "parts") return LabelScheme::parts;
    if (s == "base") return LabelScheme::base;
    throw CLI::ValidationError("--labels must be fixed, parts or base");
}

std::vector<AuditFixture> load_corpus(const std::string& dir) {
    std::vector<AuditFixture> corpus;
    fs::path labels = fs::path(dir) / "labels.txt";
    std::ifstream in(labels);
    if (!in) throw std::runtime_error("cannot read " + labels.string());
    std::string name, label;
    while (in >> name >> label) {
        AuditFixture fx;
        fx.name = name;
        fx.label = label;
        fx.drawing = load((fs::path(dir) / (name + ".tgd")).string());
        corpus.push_back(std::move(fx));
    }
    std::sort(corpus.begin(), corpus.end(),
              [](const AuditFixture& a, const AuditFixture& b) { return a.name < b.name; });
    return corpus;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verifier and enumerator for graph drawings on the torus and Klein bottle"};
    app.require_subcommand(1);
    int jobs = 1;
    app.add_option("--jobs", jobs, "worker threads (output is identical for any value)");

    std::string path, out_path = "out.svg", corpus_dir;
    std::string convention = "oriented", labels = "base", scale = "4";
    bool no_arrows = false;

    auto* c_validate = app.add_subcommand("validate", "check a drawing file");
    c_validate->add_option("file", path)->required();

    auto* c_matrix = app.add_subcommand("matrix", "print the star-crossing matrix");
    c_matrix->add_option("file", path)->required();

    auto* c_certify = app.add_subcommand("certify", "certify the counterexample drawing");
    c_certify->add_option("file", path)->required();

    auto* c_faces = app.add_subcommand("faces", "print the face report");
    c_faces->add_option("file", path)->required();

    auto* c_enum = app.add_subcommand("enumerate", "enumerate K_{2,4} rotation systems");
    c_enum->add_option("--convention", convention, "oriented|reflective");
    c_enum->add_option("--labels", labels, "fixed|parts|base");

    auto* c_audit = app.add_subcommand("audit", "audit a fixture corpus directory");
    c_audit->add_option("dir", corpus_dir)->required();
    c_audit->add_option("--labels", labels, "fixed|parts|base");

    auto* c_render = app.add_subcommand("render", "render a drawing to SVG");
    c_render->add_option("file", path)->required();
    c_render->add_option("-o,--out", out_path);
    c_render->add_option("--scale", scale, "pixels per unit (rational)");
    c_render->add_flag("--no-arrows", no_arrows);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*c_validate) {
            Drawing d = load(path);
            ValidationReport rep = validate(d);
            std::cout << report_to_text(rep, d);
            return rep.ok() ? 0 : 1;
        }
        if (*c_matrix) {
            Drawing d = load(path);
            ValidationReport rep = validate(d);
            if (!rep.ok()) {
                std::cout << report_to_text(rep, d);
                return 1;
            }
            std::cout << matrix_to_text(star_crossing_matrix(d, rep));
            return 0;
        }
        if (*c_certify) {
            Drawing d = load(path);
            CertificateReport cert = certify_counterexample(d);
            std::cout << certificate_to_text(cert, d);
            return cert.verdict ? 0 : 1;
        }
        if (*c_faces) {
            Drawing d = load(path);
            ValidationReport rep = validate(d);
            if (!rep.ok()) {
                std::cout << report_to_text(rep, d);
                return 1;
            }
            FaceSet fs = face_set(d, planarize(d, rep));
            std::cout << face_report_text(d, fs);
            EulerReport er = euler_report(d);
            std::cout << "V=" << er.V << " E=" << er.E << " F=" << er.F << " chi=" << er.chi
                      << " cellular=" << (er.cellular ? "yes" : "no") << "\n";
            std::cout << "all-b faces:";
            for (int id : all_b_faces(d, fs)) std::cout << " " << id;
            std::cout << "\n";
            return 0;
        }
        if (*c_enum) {
            if (convention != "oriented" && convention != "reflective")
                throw std::runtime_error("--convention must be oriented or reflective");
            EnumSummary s =
                enumerate_summary(scheme_of(labels), convention == "reflective", jobs);
            std::cout << enumeration_to_text(s);
            return 0;
        }
        if (*c_audit) {
            auto corpus = load_corpus(corpus_dir);
            Convention conv{false, scheme_of(labels)};
            AuditReport rep = fixture_audit(corpus, conv);
            std::cout << audit_to_text(rep);
            return rep.ok() ? 0 : 1;
        }
        if (*c_render) {
            Drawing d = load(path);
            ValidationReport rep = validate(d);
            RenderStyle style;
            auto sc = parse_rat(scale);
            if (!sc || *sc <= 0) throw std::runtime_error("bad --scale");
            style.scale = *sc;
            style.arrows = !no_arrows;
            std::ofstream out(out_path);
            if (!out) throw std::runtime_error("cannot write " + out_path);
            out << render_svg(d, rep, style);
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
