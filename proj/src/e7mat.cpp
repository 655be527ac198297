#include "e7forge/e7mat.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "e7forge/errors.hpp"

namespace e7f {

namespace {

std::string float_entry(Cplx v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g", v.real(), v.imag());
    return buf;
}

Cplx parse_float_entry(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw Error(ErrorKind::ParseError, "bad float entry '" + s + "'");
    return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
}

} // namespace

std::string e7mat_write(const E7MatFile& f) {
    const GeneratorSet& g = f.set;
    if (f.exact_mode && !g.has_exact())
        throw Error(ErrorKind::NotRepresentable, "set carries no exact entries");

    std::ostringstream os;
    os << "#E7MAT v1\n";
    os << "construction=" << construction_name(g.construction) << " rep=" << g.rep_dim
       << " count=" << g.count() << " dim=" << g.rep_dim
       << " scalar=" << (f.exact_mode ? "exact" : "float") << "\n";
    if (!f.manifest.empty()) os << "# " << f.manifest << "\n";

    for (int k = 0; k < g.count(); ++k) {
        os << "@ index=" << (k + 1) << " label=" << g.labels[static_cast<std::size_t>(k)] << "\n";
        if (f.exact_mode) {
            SparseExactMatrix m = g.exact[static_cast<std::size_t>(k)];
            m.normalize();
            for (const auto& [r, c, v] : m.entries)
                os << r << " " << c << " " << v.to_string() << "\n";
        } else {
            const Mat& m = g.mats[static_cast<std::size_t>(k)];
            for (int r = 0; r < m.rows(); ++r)
                for (int c = 0; c < m.cols(); ++c)
                    if (m(r, c) != Cplx(0, 0)) os << r << " " << c << " " << float_entry(m(r, c)) << "\n";
        }
        os << "\n";
    }
    return os.str();
}

E7MatFile e7mat_read(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line != "#E7MAT v1")
        throw Error(ErrorKind::ParseError, "missing E7MAT header");
    if (!std::getline(is, line)) throw Error(ErrorKind::ParseError, "missing metadata line");

    E7MatFile f;
    int count = 0, dim = 0;
    {
        std::istringstream meta(line);
        std::string kv;
        while (meta >> kv) {
            auto eq = kv.find('=');
            if (eq == std::string::npos)
                throw Error(ErrorKind::ParseError, "bad metadata token '" + kv + "'");
            std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
            if (key == "construction") {
                auto c = construction_from_name(val);
                if (!c) throw Error(ErrorKind::ParseError, "unknown construction " + val);
                f.set.construction = *c;
            } else if (key == "rep") {
                f.set.rep_dim = std::stoi(val);
            } else if (key == "count") {
                count = std::stoi(val);
            } else if (key == "dim") {
                dim = std::stoi(val);
            } else if (key == "scalar") {
                f.exact_mode = (val == "exact");
            }
        }
    }

    SparseExactMatrix current;
    Mat current_f;
    bool have_matrix = false;
    auto flush = [&]() {
        if (!have_matrix) return;
        if (f.exact_mode) {
            current.normalize();
            f.set.mats.push_back(current.embed());
            f.set.exact.push_back(current);
        } else {
            f.set.mats.push_back(current_f);
        }
        have_matrix = false;
    };

    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (line.size() > 2) f.manifest = line.substr(2);
            continue;
        }
        if (line[0] == '@') {
            flush();
            auto lab = line.find("label=");
            if (lab == std::string::npos)
                throw Error(ErrorKind::ParseError, "matrix header without label");
            f.set.labels.push_back(line.substr(lab + 6));
            current = SparseExactMatrix{};
            current.dim = dim;
            current_f = Mat::Zero(dim, dim);
            have_matrix = true;
            continue;
        }
        std::istringstream es(line);
        int r, c;
        std::string scalar;
        if (!(es >> r >> c >> scalar))
            throw Error(ErrorKind::ParseError, "bad entry line '" + line + "'");
        if (f.exact_mode) {
            current.add(r, c, ExactScalar::from_string(scalar));
        } else {
            current_f(r, c) = parse_float_entry(scalar);
        }
    }
    flush();
    if (f.set.count() != count)
        throw Error(ErrorKind::ParseError, "matrix count mismatch");
    return f;
}

void e7mat_save(const E7MatFile& f, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw Error(ErrorKind::ParseError, "cannot open " + path);
    os << e7mat_write(f);
}

E7MatFile e7mat_load(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw Error(ErrorKind::ParseError, "cannot open " + path);
    std::ostringstream ss;
    ss << is.rdbuf();
    return e7mat_read(ss.str());
}

} // namespace e7f
