#include "rpcc/certificate_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "rpcc/errors.hpp"

namespace rpcc {

std::string format_real(double value) {
    if (!std::isfinite(value)) throw DomainError("cannot serialize a non-finite real");
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

namespace {

void append_mass_triple(std::string& out, const char* name, const MassTriple& mt,
                        const char* indent) {
    out += indent;
    out += "\"";
    out += name;
    out += "\": {\"m0\": " + format_real(mt.m0) + ", \"m1\": " + format_real(mt.m1) +
           ", \"m2\": " + format_real(mt.m2) + "}";
}

}  // namespace

std::string certificate_to_json(const Certificate& cert) {
    std::string out;
    out += "{\n";
    out += "  \"schema_version\": \"1\",\n";
    out += "  \"n\": " + std::to_string(cert.n) + ",\n";
    out += "  \"big_n\": " + std::to_string(cert.big_n) + ",\n";
    out += "  \"branch\": \"" + std::string(branch_name(cert.branch)) + "\",\n";
    out += "  \"alpha\": " + format_real(cert.alpha) + ",\n";
    out += "  \"h_n\": " + format_real(cert.h_n) + ",\n";
    out += "  \"total_mass\": " + format_real(cert.total_mass) + ",\n";
    out += "  \"interval\": {\"t_lo\": " + format_real(cert.interval.t_lo) +
           ", \"t_hi\": " + format_real(cert.interval.t_hi) + "},\n";
    append_mass_triple(out, "mass_a", cert.mass_a, "  ");
    out += ",\n";
    append_mass_triple(out, "mass_b", cert.mass_b, "  ");
    out += ",\n";
    out += "  \"reduced_residuals\": {\n";
    out += "    \"residual_a_of_mass_a\": " + format_real(cert.residual_a_of_mass_a) + ",\n";
    out += "    \"residual_b_of_mass_a\": " + format_real(cert.residual_b_of_mass_a) + ",\n";
    out += "    \"residual_a_of_mass_b\": " + format_real(cert.residual_a_of_mass_b) + ",\n";
    out += "    \"residual_b_of_mass_b\": " + format_real(cert.residual_b_of_mass_b) + "\n";
    out += "  },\n";
    out += "  \"tolerances\": {\"alpha_min\": " + format_real(cert.settings.alpha_min) +
           ", \"alpha_max\": " + format_real(cert.settings.alpha_max) +
           ", \"samples\": " + std::to_string(cert.settings.samples) +
           ", \"rel_tol\": " + format_real(cert.settings.rel_tol) +
           ", \"max_iter\": " + std::to_string(cert.settings.max_iter) + "},\n";
    out += "  \"tool_version\": \"" + cert.tool_version + "\"\n";
    out += "}\n";
    return out;
}

namespace {

using nlohmann::json;

class StrictReader {
  public:
    StrictReader(const json& doc, const std::string& scope, std::vector<std::string>& issues)
        : doc_(doc), scope_(scope), issues_(issues) {
        if (!doc.is_object()) {
            issues_.push_back(scope_ + ": expected a JSON object");
        }
    }

    ~StrictReader() {
        if (!doc_.is_object()) return;
        for (const auto& item : doc_.items()) {
            if (seen_.count(item.key()) == 0) {
                issues_.push_back(scope_ + ": unknown field \"" + item.key() + "\"");
            }
        }
    }

    const json* field(const std::string& name) {
        seen_.insert(name);
        if (!doc_.is_object()) return nullptr;
        auto it = doc_.find(name);
        if (it == doc_.end()) {
            issues_.push_back(scope_ + ": missing field \"" + name + "\"");
            return nullptr;
        }
        return &*it;
    }

    int read_int(const std::string& name, int fallback = 0) {
        const json* v = field(name);
        if (v == nullptr) return fallback;
        if (!v->is_number_integer()) {
            issues_.push_back(scope_ + ": field \"" + name + "\" must be an integer");
            return fallback;
        }
        return v->get<int>();
    }

    double read_real(const std::string& name, double fallback = 0.0) {
        const json* v = field(name);
        if (v == nullptr) return fallback;
        if (!v->is_number()) {
            issues_.push_back(scope_ + ": field \"" + name + "\" must be a number");
            return fallback;
        }
        return v->get<double>();
    }

    std::string read_string(const std::string& name) {
        const json* v = field(name);
        if (v == nullptr) return {};
        if (!v->is_string()) {
            issues_.push_back(scope_ + ": field \"" + name + "\" must be a string");
            return {};
        }
        return v->get<std::string>();
    }

    const json* read_object(const std::string& name) {
        const json* v = field(name);
        if (v == nullptr) return nullptr;
        if (!v->is_object()) {
            issues_.push_back(scope_ + ": field \"" + name + "\" must be an object");
            return nullptr;
        }
        return v;
    }

  private:
    const json& doc_;
    std::string scope_;
    std::vector<std::string>& issues_;
    std::set<std::string> seen_;
};

MassTriple read_mass_triple(const json* obj, const std::string& scope,
                            std::vector<std::string>& issues) {
    MassTriple mt;
    if (obj == nullptr) return mt;
    StrictReader reader(*obj, scope, issues);
    mt.m0 = reader.read_real("m0");
    mt.m1 = reader.read_real("m1");
    mt.m2 = reader.read_real("m2");
    return mt;
}

}  // namespace

Certificate certificate_from_json(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) {
        throw CertificateFormatError("certificate is not valid JSON",
                                     {"document does not parse as JSON"});
    }

    std::vector<std::string> issues;
    Certificate cert;
    {
        StrictReader reader(doc, "certificate", issues);
        std::string schema = reader.read_string("schema_version");
        if (!schema.empty() && schema != "1") {
            issues.push_back("certificate: unsupported schema_version \"" + schema + "\"");
        }
        cert.n = reader.read_int("n");
        cert.big_n = reader.read_int("big_n");
        std::string branch = reader.read_string("branch");
        if (auto parsed = branch_from_name(branch)) {
            cert.branch = *parsed;
        } else if (!branch.empty()) {
            issues.push_back("certificate: branch must be \"lower\" or \"upper\"");
        }
        cert.alpha = reader.read_real("alpha");
        cert.h_n = reader.read_real("h_n");
        cert.total_mass = reader.read_real("total_mass");
        if (const json* interval = reader.read_object("interval")) {
            StrictReader iv(*interval, "interval", issues);
            cert.interval.t_lo = iv.read_real("t_lo");
            cert.interval.t_hi = iv.read_real("t_hi");
        }
        cert.mass_a = read_mass_triple(reader.read_object("mass_a"), "mass_a", issues);
        cert.mass_b = read_mass_triple(reader.read_object("mass_b"), "mass_b", issues);
        if (const json* rr = reader.read_object("reduced_residuals")) {
            StrictReader rres(*rr, "reduced_residuals", issues);
            cert.residual_a_of_mass_a = rres.read_real("residual_a_of_mass_a");
            cert.residual_b_of_mass_a = rres.read_real("residual_b_of_mass_a");
            cert.residual_a_of_mass_b = rres.read_real("residual_a_of_mass_b");
            cert.residual_b_of_mass_b = rres.read_real("residual_b_of_mass_b");
        }
        if (const json* tol = reader.read_object("tolerances")) {
            StrictReader tr(*tol, "tolerances", issues);
            cert.settings.alpha_min = tr.read_real("alpha_min");
            cert.settings.alpha_max = tr.read_real("alpha_max");
            cert.settings.samples = tr.read_int("samples");
            cert.settings.rel_tol = tr.read_real("rel_tol");
            cert.settings.max_iter = tr.read_int("max_iter");
        }
        cert.tool_version = reader.read_string("tool_version");
    }
    if (!issues.empty()) {
        throw CertificateFormatError("certificate schema violation", std::move(issues));
    }
    return cert;
}

Certificate read_certificate_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw CertificateFormatError("cannot read certificate file",
                                     {"unreadable path: " + path});
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return certificate_from_json(buffer.str());
}

void write_text_file_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open for writing: " + tmp);
        out << content;
        out.flush();
        if (!out.good()) throw Error("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw Error("cannot rename into place: " + path);
    }
}

void write_certificate_file(const std::string& path, const Certificate& cert) {
    write_text_file_atomic(path, certificate_to_json(cert));
}

namespace {

void append_mass_check(std::string& out, const char* name, const MassVectorCheck& check) {
    out += "  \"";
    out += name;
    out += "\": {\n";
    out += "    \"fitted_lambda\": " + format_real(check.fitted_lambda) + ",\n";
    out += "    \"max_body_residual\": " + format_real(check.max_body_residual) + ",\n";
    out += "    \"center_of_mass_norm\": " + format_real(check.center_of_mass_norm) + ",\n";
    out += "    \"total\": " + format_real(check.total) + "\n";
    out += "  }";
}

}  // namespace

std::string verification_report_to_json(const VerificationReport& report) {
    std::string out;
    out += "{\n";
    out += std::string("  \"passed\": ") + (report.passed ? "true" : "false") + ",\n";
    out += "  \"tolerance_used\": " + format_real(report.tolerance_used) + ",\n";
    out += std::string("  \"totals_equal\": ") + (report.totals_equal ? "true" : "false") +
           ",\n";
    out += std::string("  \"masses_distinct\": ") +
           (report.masses_distinct ? "true" : "false") + ",\n";
    append_mass_check(out, "mass_a", report.a);
    out += ",\n";
    append_mass_check(out, "mass_b", report.b);
    out += "\n}\n";
    return out;
}

}  // namespace rpcc
