#include <openssl/sha.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pq/io.hpp"
#include "pq/reconstruction.hpp"
#include "pq/shadow.hpp"
#include "pq/surface.hpp"

namespace {

using pq::json;

enum Exit { kOk = 0, kMismatch = 1, kArgs = 2, kIo = 3, kDomain = 4 };

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_file(const std::string& path) {
    std::string text = read_file(path);
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw pq::Error(pq::ErrorKind::ParseError, path + ": byte " + std::to_string(e.byte));
    }
}

// git blob hash: sha1("blob <len>\0" + content)
std::string blob_hash(const std::string& content) {
    std::string data = "blob " + std::to_string(content.size()) + '\0' + content;
    unsigned char md[SHA_DIGEST_LENGTH];
    SHA1(reinterpret_cast<const unsigned char*>(data.data()), data.size(), md);
    char hex[2 * SHA_DIGEST_LENGTH + 1];
    for (int i = 0; i < SHA_DIGEST_LENGTH; ++i) std::snprintf(hex + 2 * i, 3, "%02x", md[i]);
    return hex;
}

struct Run {
    std::string command;
    std::vector<std::string> args;
    std::vector<std::string> inputs;
    std::string out;
    std::string manifest;
    std::string format = "json";
    int threads = 1;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void emit(const std::string& text) const {
        if (out.empty()) {
            std::cout << text;
        } else {
            std::ofstream f(out, std::ios::binary);
            if (!f || !(f << text)) throw IoError("cannot write " + out);
        }
        if (manifest.empty()) return;
        std::string joined;
        for (const auto& p : inputs) joined += read_file(p);
        double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        json m = {{"command", command},      {"arguments", args},
                  {"input_hash", blob_hash(joined)}, {"output_hash", blob_hash(text)},
                  {"workers", threads},      {"wall_seconds", wall},
                  {"output", out.empty() ? "-" : out}};
        std::ofstream f(manifest, std::ios::binary);
        if (!f || !(f << m.dump(2) << '\n')) throw IoError("cannot write " + manifest);
    }

    void emit_quiver(const pq::Quiver& q, const json& extra = json::object()) const {
        if (format == "dot") {
            emit(pq::to_dot(q));
            return;
        }
        json j = {{"quiver", pq::quiver_to_json(q)}};
        for (auto& [k, v] : extra.items()) j[k] = v;
        emit(j.dump() + "\n");
    }
};

pq::Quiver load_quiver(const std::string& path) { return pq::quiver_from_json(parse_file(path)); }

int cmd_shadows(Run& run, int n, const std::string& mode) {
    auto m = mode == "basic" ? pq::ShadowMode::BasicTame : pq::ShadowMode::Essential;
    auto list = pq::enumerate_shadows(n, m, run.threads);
    json shadows = json::array();
    for (const auto& s : list) shadows.push_back(pq::shadow_to_json(s));
    json j = {{"n", n}, {"mode", mode}, {"count", list.size()}, {"shadows", shadows}};
    if (!run.out.empty()) run.emit(j.dump() + "\n");
    std::cout << list.size() << "\n";
    return kOk;
}

int cmd_classify(Run& run, int n, const std::string& mode, bool verify) {
    auto r = pq::classify(n, pq::recon_mode_from_string(mode), run.threads);
    json j = pq::classify_to_json(r);
    int code = kOk;
    if (verify) {
        auto v = pq::verify_against_paper(r);
        j["verify"] = pq::verify_to_json(v);
        if (!v.ok()) {
            code = kMismatch;
            std::cerr << "verification failed: " << v.missing.size() << " missing, " << v.extra.size()
                      << " extra\n"
                      << pq::verify_to_json(v).dump() << "\n";
        }
    }
    if (!run.out.empty()) run.emit(j.dump() + "\n");
    std::cout << r.survivors.size() << " quivers";
    if (!r.undecided.empty()) std::cout << " (" << r.undecided.size() << " undecided)";
    if (verify) std::cout << (code == kOk ? ", verified" : ", MISMATCH");
    std::cout << "\n";
    return code;
}

int cmd_reconstruct(Run& run, const std::string& path, const std::string& mode, bool report) {
    pq::Shadow a = pq::shadow_from_json(parse_file(path));
    pq::ReconstructOptions opt;
    opt.mode = pq::recon_mode_from_string(mode);
    opt.threads = run.threads;
    auto res = pq::reconstruct(a, opt);
    json surv = json::array(), reports = json::array();
    for (const auto& c : res) {
        if (!c.report.excluded) surv.push_back(pq::quiver_to_json(c.candidate.assembled));
        if (!report) continue;
        json cyc = json::array(), loops = json::array();
        for (auto [i, j] : c.candidate.two_cycles) cyc.push_back({i + 1, j + 1});
        for (int i : c.candidate.loops) loops.push_back(i + 1);
        reports.push_back({{"candidate", pq::quiver_to_json(c.candidate.assembled)},
                           {"two_cycles", cyc},
                           {"loops", loops},
                           {"verdict", c.report.excluded ? "excluded" : "survives"},
                           {"rule", c.report.rule},
                           {"citation", c.report.citation},
                           {"witness", c.report.witness},
                           {"undecided", c.report.undecided}});
    }
    json j = {{"shadow", pq::shadow_to_json(a)}, {"mode", mode}, {"survivors", surv}};
    if (report) j["reports"] = reports;
    run.emit(j.dump() + "\n");
    return kOk;
}

int cmd_mutate(Run& run, const std::string& path, int vertex) {
    pq::Quiver q = load_quiver(path);
    if (vertex < 1 || vertex > q.n())
        throw pq::Error(pq::ErrorKind::VertexOutOfRange, "vertex " + std::to_string(vertex));
    auto matches = pq::rewrite_matches(q, vertex - 1);
    pq::Quiver r = pq::mutate_block(q, vertex - 1);
    run.emit_quiver(r, {{"rewrite", pq::to_string(matches.front().kind)}, {"vertex", vertex}});
    return kOk;
}

int cmd_recognize(Run& run, const std::string& path) {
    pq::Quiver q = load_quiver(path);
    auto d = pq::recognize_gwsa_gabriel(q);
    json j = {{"quiver", pq::quiver_to_json(q)}, {"recognized", d.has_value()}};
    if (d) j["decomposition"] = pq::decomposition_to_json(*d);
    run.emit(j.dump() + "\n");
    return kOk;
}

int cmd_canon(Run& run, const std::string& path) {
    pq::Quiver q = load_quiver(path);
    auto c = pq::canonical_form(q);
    json perm = json::array();
    for (int p : c.perm) perm.push_back(p + 1);
    run.emit_quiver(c.quiver, {{"perm", perm}});
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"periodic quiver toolkit"};
    app.require_subcommand(1);
    Run run;
    for (int i = 1; i < argc; ++i) run.args.push_back(argv[i]);

    auto common = [&](CLI::App* c) {
        c->add_option("--out", run.out, "output file (default stdout)");
        c->add_option("--manifest", run.manifest, "write a run manifest JSON");
    };

    int n = 0;
    std::string smode = "essential", mode = "tsp4", file;
    int vertex = 0;
    bool verify = false, report = false;

    auto* shadows = app.add_subcommand("shadows", "enumerate tame periodicity shadows");
    shadows->add_option("--n", n, "size")->required()->check(CLI::Range(1, pq::kMaxEnumerationN));
    shadows->add_option("--mode", smode, "basic or essential")->check(CLI::IsMember({"basic", "essential"}));
    shadows->add_option("--threads", run.threads)->check(CLI::PositiveNumber);
    common(shadows);

    auto* classify = app.add_subcommand("classify", "classify Gabriel quivers with n vertices");
    classify->add_option("--n", n, "3, 4 or 5")->required();
    classify->add_option("--mode", mode, "gqt or tsp4")->check(CLI::IsMember({"gqt", "tsp4"}));
    classify->add_flag("--verify", verify, "compare with the golden lists");
    classify->add_option("--threads", run.threads)->check(CLI::PositiveNumber);
    common(classify);

    auto* recon = app.add_subcommand("reconstruct", "candidate quivers over one shadow");
    recon->add_option("--shadow", file, "shadow JSON")->required();
    recon->add_option("--mode", mode, "gqt or tsp4")->check(CLI::IsMember({"gqt", "tsp4"}));
    recon->add_flag("--report", report, "include every candidate report");
    recon->add_option("--threads", run.threads)->check(CLI::PositiveNumber);
    common(recon);

    auto* mutate = app.add_subcommand("mutate", "block rewrite at a vertex");
    mutate->add_option("--quiver", file, "quiver JSON")->required();
    mutate->add_option("--vertex", vertex, "1-based vertex")->required();
    mutate->add_option("--format", run.format)->check(CLI::IsMember({"json", "dot"}));
    common(mutate);

    auto* recognize = app.add_subcommand("recognize", "decompose into Gabriel-level blocks");
    recognize->add_option("--quiver", file, "quiver JSON")->required();
    common(recognize);

    auto* canon = app.add_subcommand("canon", "canonical form");
    canon->add_option("--quiver", file, "quiver JSON")->required();
    canon->add_option("--format", run.format)->check(CLI::IsMember({"json", "dot"}));
    common(canon);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kArgs;
    }
    if (!file.empty()) run.inputs.push_back(file);

    try {
        if (*shadows) {
            run.command = "shadows";
            return cmd_shadows(run, n, smode);
        }
        if (*classify) {
            run.command = "classify";
            if (n < 3 || n > 5) {
                std::cerr << "UnsupportedSize: classify covers n = 3, 4, 5\n";
                return kArgs;
            }
            return cmd_classify(run, n, mode, verify);
        }
        if (*recon) {
            run.command = "reconstruct";
            return cmd_reconstruct(run, file, mode, report);
        }
        if (*mutate) {
            run.command = "mutate";
            return cmd_mutate(run, file, vertex);
        }
        if (*recognize) {
            run.command = "recognize";
            return cmd_recognize(run, file);
        }
        run.command = "canon";
        return cmd_canon(run, file);
    } catch (const IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kIo;
    } catch (const pq::Error& e) {
        std::cerr << pq::to_string(e.kind()) << ": " << e.what() << "\n";
        return e.kind() == pq::ErrorKind::ParseError ? kIo : kDomain;
    }
}
