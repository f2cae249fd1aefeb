#include "refsev/polygon.hpp"

#include <algorithm>
#include <sstream>

namespace refsev {

HTransversePolygon::HTransversePolygon(long d_top, long d_bottom,
                                       IntMultiset right, IntMultiset left)
    : d_top_(d_top), d_bottom_(d_bottom), right_(std::move(right)),
      left_(std::move(left)) {
    if (d_top_ < 0 || d_bottom_ < 0)
        throw DomainError("negative horizontal edge length");
    if (right_.size() != left_.size())
        throw DomainError("height mismatch: |r|=" + std::to_string(right_.size()) +
                          ", |l|=" + std::to_string(left_.size()));
    if (d_top_ + right_.weight() != d_bottom_ + left_.weight())
        throw DomainError(
            "balance violated: dt+sum(r)=" +
            std::to_string(d_top_ + right_.weight()) +
            ", db+sum(l)=" + std::to_string(d_bottom_ + left_.weight()));

    // Right boundary advances by the right slopes in descending order going
    // down, left boundary by the left slopes in ascending order; any other
    // arrangement of the same slope multisets would break convexity.
    std::vector<int> rsteps, lsteps;
    for (const auto& [v, m] : right_.entries())
        rsteps.insert(rsteps.end(), static_cast<size_t>(m), v);
    for (const auto& [v, m] : left_.entries())
        lsteps.insert(lsteps.end(), static_cast<size_t>(m), v);
    std::sort(rsteps.begin(), rsteps.end(), std::greater<int>());
    std::sort(lsteps.begin(), lsteps.end());

    widths_.push_back(d_top_);
    for (size_t k = 0; k < rsteps.size(); ++k) {
        long w = widths_.back() + rsteps[k] - lsteps[k];
        if (w < 0)
            throw DomainError("negative row width at row " + std::to_string(k + 1));
        widths_.push_back(w);
    }
    if (widths_.back() != d_bottom_)
        throw DomainError("bottom width does not close up"); // unreachable if balanced
}

long HTransversePolygon::lattice_point_count() const {
    long n = 0;
    for (long w : widths_) n += w + 1;
    return n;
}

long HTransversePolygon::interior_point_count() const {
    long n = 0;
    for (size_t k = 1; k + 1 < widths_.size(); ++k)
        n += std::max<long>(0, widths_[k] - 1);
    return n;
}

std::string HTransversePolygon::str() const {
    std::ostringstream os;
    os << "dt=" << d_top_ << ";db=" << d_bottom_ << ";r=" << right_.str()
       << ";l=" << left_.str();
    return os.str();
}

namespace presets {

HTransversePolygon p2(long d) {
    if (d < 0) throw DomainError("p2 degree must be non-negative");
    IntMultiset r, l;
    r.insert(1, d);
    l.insert(0, d);
    return HTransversePolygon(0, d, r, l);
}

HTransversePolygon sigma(long m, long c, long d) {
    if (m < 1) throw DomainError("sigma requires m >= 1");
    if (c < 0 || d < 0) throw DomainError("sigma class must be non-negative");
    IntMultiset r, l;
    r.insert(static_cast<int>(m), d);
    l.insert(0, d);
    return HTransversePolygon(c, c + d * m, r, l);
}

HTransversePolygon wps11m(long m, long d) {
    if (m < 1) throw DomainError("wps11m requires m >= 1");
    if (d < 0) throw DomainError("wps11m degree must be non-negative");
    return sigma(m, 0, d);
}

HTransversePolygon wps1mm(long m, long d) {
    if (m < 2) throw DomainError("wps1mm requires m >= 2");
    if (d < 0) throw DomainError("wps1mm degree must be non-negative");
    IntMultiset r, l;
    r.insert(-1, d * (m - 1));
    r.insert(static_cast<int>(m - 1), d);
    l.insert(0, d * m);
    return HTransversePolygon(0, 0, r, l);
}

} // namespace presets

HTransversePolygon FamilySpec::polygon(long c, long d) const {
    switch (kind) {
        case Kind::P2: return presets::p2(d);
        case Kind::Sigma: return presets::sigma(m, c, d);
        case Kind::WPS11M: return presets::wps11m(m, d);
        case Kind::WPS1MM: return presets::wps1mm(m, d);
    }
    throw DomainError("unknown family");
}

std::string FamilySpec::str() const {
    switch (kind) {
        case Kind::P2: return "p2";
        case Kind::Sigma: return "sigma:m=" + std::to_string(m);
        case Kind::WPS11M: return "wps11m:m=" + std::to_string(m);
        case Kind::WPS1MM: return "wps1mm:m=" + std::to_string(m);
    }
    throw DomainError("unknown family");
}

namespace {

std::map<std::string, std::string> parse_kv(const std::string& text, char sep) {
    std::map<std::string, std::string> kv;
    if (text.empty()) return kv;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, sep)) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw DomainError("expected key=value, got '" + item + "'");
        std::string key = item.substr(0, eq);
        if (kv.count(key)) throw DomainError("duplicate key '" + key + "'");
        kv[key] = item.substr(eq + 1);
    }
    return kv;
}

long parse_long(const std::string& text, const std::string& what) {
    size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(text, &pos);
    } catch (const std::exception&) {
        throw DomainError("bad integer for " + what + ": '" + text + "'");
    }
    if (pos != text.size())
        throw DomainError("bad integer for " + what + ": '" + text + "'");
    return v;
}

long require_long(const std::map<std::string, std::string>& kv,
                  const std::string& key, const std::string& ctx) {
    auto it = kv.find(key);
    if (it == kv.end())
        throw DomainError(ctx + " is missing parameter '" + key + "'");
    return parse_long(it->second, ctx + " parameter '" + key + "'");
}

} // namespace

FamilySpec parse_family(const std::string& text) {
    std::string name = text;
    std::string params;
    if (auto colon = text.find(':'); colon != std::string::npos) {
        name = text.substr(0, colon);
        params = text.substr(colon + 1);
    }
    FamilySpec fam;
    if (name == "p2") {
        fam.kind = FamilySpec::Kind::P2;
        if (!params.empty()) throw DomainError("p2 takes no family parameters");
        return fam;
    }
    if (name == "sigma")
        fam.kind = FamilySpec::Kind::Sigma;
    else if (name == "wps11m")
        fam.kind = FamilySpec::Kind::WPS11M;
    else if (name == "wps1mm")
        fam.kind = FamilySpec::Kind::WPS1MM;
    else
        throw DomainError("unknown family '" + name + "'");
    auto kv = parse_kv(params, ',');
    fam.m = require_long(kv, "m", name);
    kv.erase("m");
    if (!kv.empty())
        throw DomainError(name + " family takes only parameter m");
    // surface-level validation
    fam.polygon(0, 0);
    return fam;
}

HTransversePolygon parse_polygon(const std::string& text) {
    if (text.rfind("dt=", 0) == 0 || text.find(';') != std::string::npos) {
        auto kv = parse_kv(text, ';');
        long dt = require_long(kv, "dt", "polygon");
        long db = require_long(kv, "db", "polygon");
        auto need = [&](const char* key) -> std::string {
            auto it = kv.find(key);
            if (it == kv.end())
                throw DomainError(std::string("polygon is missing parameter '") +
                                  key + "'");
            return it->second;
        };
        IntMultiset r = IntMultiset::parse(need("r"));
        IntMultiset l = IntMultiset::parse(need("l"));
        for (const auto& k : {"dt", "db", "r", "l"}) kv.erase(k);
        if (!kv.empty())
            throw DomainError("unknown polygon parameter '" +
                              kv.begin()->first + "'");
        return HTransversePolygon(dt, db, r, l);
    }

    std::string name = text;
    std::string params;
    if (auto colon = text.find(':'); colon != std::string::npos) {
        name = text.substr(0, colon);
        params = text.substr(colon + 1);
    }
    auto kv = parse_kv(params, ',');
    auto only = [&](std::initializer_list<const char*> keys) {
        auto copy = kv;
        for (const auto& k : keys) copy.erase(k);
        if (!copy.empty())
            throw DomainError("unknown parameter '" + copy.begin()->first +
                              "' for preset " + name);
    };
    if (name == "p2") {
        only({"d"});
        return presets::p2(require_long(kv, "d", name));
    }
    if (name == "sigma") {
        only({"m", "c", "d"});
        return presets::sigma(require_long(kv, "m", name),
                              require_long(kv, "c", name),
                              require_long(kv, "d", name));
    }
    if (name == "wps11m") {
        only({"m", "d"});
        return presets::wps11m(require_long(kv, "m", name),
                               require_long(kv, "d", name));
    }
    if (name == "wps1mm") {
        only({"m", "d"});
        return presets::wps1mm(require_long(kv, "m", name),
                               require_long(kv, "d", name));
    }
    throw DomainError("unknown polygon preset '" + name + "'");
}

} // namespace refsev
