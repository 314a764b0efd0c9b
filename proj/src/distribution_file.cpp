#include "slc/distribution_file.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace slc {

using json = nlohmann::ordered_json;

std::string subset_key(Mask s) {
    std::string out;
    for (int i = 1; s != 0; ++i, s >>= 1) {
        if ((s & 1u) == 0) continue;
        if (!out.empty()) out += ',';
        out += std::to_string(i);
    }
    return out;
}

namespace {

Mask parse_key(const std::string& key, int n) {
    auto fail = [&](const std::string& why) -> Mask {
        throw DistributionFileError("bad subset key '" + key + "': " + why);
    };
    if (key.rfind("mask:", 0) == 0) {
        const std::string digits = key.substr(5);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) return fail("not a bitmask");
        if (digits.size() > 6) return fail("bitmask outside the ground set");
        const unsigned long m = std::stoul(digits);
        if (m >= (1ul << n)) return fail("bitmask outside the ground set");
        return static_cast<Mask>(m);
    }
    if (key.empty()) return 0;
    Mask s = 0;
    int prev = 0;
    std::size_t pos = 0;
    while (pos <= key.size()) {
        const std::size_t comma = std::min(key.find(',', pos), key.size());
        const std::string part = key.substr(pos, comma - pos);
        if (part.empty() || part.size() > 3 || part.find_first_not_of("0123456789") != std::string::npos)
            return fail("expected comma-separated indices");
        const int idx = std::stoi(part);
        if (idx < 1 || idx > n) return fail("index " + part + " outside 1.." + std::to_string(n));
        if (idx <= prev) return fail("indices must be strictly increasing");
        s |= var_bit(idx);
        prev = idx;
        pos = comma + 1;
    }
    return s;
}

Rational parse_weight(const json& value, const std::string& key) {
    Rational w;
    try {
        if (value.is_string()) w = Rational::parse(value.get<std::string>());
        else if (value.is_number_integer()) w = Rational::parse(value.dump());
        else throw DistributionFileError("weight for '" + key + "' must be a rational string or an integer");
    } catch (const std::invalid_argument& e) {
        throw DistributionFileError("weight for '" + key + "': " + e.what());
    }
    if (w.sign() < 0) throw DistributionFileError("weight for '" + key + "' is negative: " + w.str());
    return w;
}

}  // namespace

SubsetPoly parse_distribution(std::string_view text, bool normalize_weights) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DistributionFileError(std::string("malformed distribution document: ") + e.what());
    }
    if (!doc.is_object()) throw DistributionFileError("distribution document must be a JSON object");
    if (!doc.contains("n") || !doc["n"].is_number_integer()) throw DistributionFileError("missing integer field 'n'");
    const auto n = doc["n"].get<long long>();
    if (n < 1 || n > kMaxVariables)
        throw DistributionFileError("n = " + std::to_string(n) + " outside 1.." + std::to_string(kMaxVariables));
    if (!doc.contains("weights") || !doc["weights"].is_object())
        throw DistributionFileError("missing object field 'weights'");

    SubsetPoly p(static_cast<int>(n));
    std::vector<bool> seen(p.size(), false);
    for (const auto& [key, value] : doc["weights"].items()) {
        const Mask s = parse_key(key, static_cast<int>(n));
        if (seen[s]) throw DistributionFileError("subset " + subset_str(s) + " listed twice");
        seen[s] = true;
        p.set_coeff(s, parse_weight(value, key));
    }
    if (normalize_weights) {
        if (p.coeff_sum().is_zero()) throw DistributionFileError("cannot normalize: all weights are zero");
        p = normalize(p);
    }
    return p;
}

SubsetPoly load_distribution(const std::filesystem::path& path, bool normalize_weights) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DistributionFileError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_distribution(buf.str(), normalize_weights);
}

std::string write_distribution(const SubsetPoly& p) {
    json doc;
    doc["n"] = p.n();
    doc["weights"] = json::object();
    for (Mask s = 0; s < p.size(); ++s)
        if (!p.coeff(s).is_zero()) doc["weights"][subset_key(s)] = p.coeff(s).str();
    return doc.dump(2) + "\n";
}

}  // namespace slc
