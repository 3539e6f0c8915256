#include "cpta/json_io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace cpta {

namespace {

using nlohmann::json;

// nlohmann keeps the last value of a repeated key silently; a duplicate
// context must instead be a validation error, so track keys per open object
// during the parse
json parse_checked(const std::string& text) {
    std::vector<std::set<std::string>> open_objects;
    json::parser_callback_t cb = [&open_objects](int /*depth*/, json::parse_event_t event,
                                                 json& parsed) {
        switch (event) {
            case json::parse_event_t::object_start:
                open_objects.emplace_back();
                break;
            case json::parse_event_t::object_end:
                open_objects.pop_back();
                break;
            case json::parse_event_t::key:
                if (!open_objects.back().insert(parsed.get<std::string>()).second)
                    throw ValidationError("duplicate key " + parsed.dump());
                break;
            default:
                break;
        }
        return true;
    };
    try {
        return json::parse(text, cb);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
}

const json& require_member(const json& obj, const char* key, const char* where) {
    if (!obj.is_object())
        throw ValidationError(std::string(where) + " must be a JSON object");
    auto it = obj.find(key);
    if (it == obj.end())
        throw ValidationError(std::string(where) + " is missing \"" + key + "\"");
    return *it;
}

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed,
                    const char* where) {
    for (const auto& item : obj.items()) {
        const std::string& k = item.key();
        if (std::none_of(allowed.begin(), allowed.end(),
                         [&k](const char* a) { return k == a; }))
            throw ValidationError("unknown key \"" + k + "\" in " + where);
    }
}

} // namespace

Cpt cpt_from_json(const json& j, int n) {
    if (!j.is_object()) throw ValidationError("CPT entry must be a JSON object");
    reject_unknown(j, {"parents", "rules"}, "CPT object");

    const json& jp = require_member(j, "parents", "CPT object");
    if (!jp.is_array()) throw ValidationError("\"parents\" must be an array");
    uint32_t bits = 0;
    long long prev = -1;
    for (const json& e : jp) {
        if (!e.is_number_integer()) throw ValidationError("parent indices must be integers");
        const long long a = e.get<long long>();
        if (a < 0 || a >= n - 1)
            throw ValidationError("parent index " + std::to_string(a) + " outside 0.." +
                                  std::to_string(n - 2));
        if (a <= prev) throw ValidationError("\"parents\" must be strictly ascending");
        prev = a;
        bits |= uint32_t(1) << a;
    }
    AttributeSet parents(bits);
    const int k = parents.count();

    const json& jr = require_member(j, "rules", "CPT object");
    if (!jr.is_object()) throw ValidationError("\"rules\" must be an object");
    const uint64_t want = uint64_t(1) << k;
    if (jr.size() != want)
        throw ValidationError("incomplete CPT: " + std::to_string(k) + " parents need exactly " +
                              std::to_string(want) + " rules, got " + std::to_string(jr.size()));
    BitVector prefs(want);
    for (const auto& item : jr.items()) {
        const std::string& ctx = item.key();
        if (int(ctx.size()) != k)
            throw ValidationError("context \"" + ctx + "\" must have " + std::to_string(k) +
                                  " digits");
        uint32_t idx = 0;
        for (char ch : ctx) {
            if (ch != '0' && ch != '1')
                throw ValidationError("context \"" + ctx + "\" may contain only 0 and 1");
            idx = (idx << 1) | uint32_t(ch == '1');
        }
        if (!item.value().is_string())
            throw ValidationError("rule for context \"" + ctx + "\" must be a string");
        const std::string rule = item.value().get<std::string>();
        if (rule == "1>0")
            prefs.set(idx, true);
        else if (rule != "0>1")
            throw ValidationError("rule must be \"0>1\" or \"1>0\", got \"" + rule + "\"");
    }
    // duplicate contexts were rejected during the parse, and every key was a
    // valid distinct index, so exactly the 2^k contexts are present
    return Cpt(n, parents, std::move(prefs));
}

Instance parse_instance(const std::string& text) {
    const json j = parse_checked(text);
    if (!j.is_object()) throw ValidationError("instance file must be a JSON object");
    reject_unknown(j, {"n", "cpts"}, "instance object");

    const json& jn = require_member(j, "n", "instance object");
    if (!jn.is_number_integer()) throw ValidationError("\"n\" must be an integer");
    const long long n = jn.get<long long>();
    if (n < 2 || n > kMaxN)
        throw ValidationError("\"n\" must be in [2, " + std::to_string(kMaxN) + "]");

    const json& jc = require_member(j, "cpts", "instance object");
    if (!jc.is_array()) throw ValidationError("\"cpts\" must be an array");
    if (jc.empty()) throw ValidationError("instance needs at least one CPT");
    std::vector<Cpt> cpts;
    cpts.reserve(jc.size());
    for (const json& e : jc) cpts.push_back(cpt_from_json(e, int(n)));
    return Instance(int(n), std::move(cpts));
}

json cpt_to_json(const Cpt& c) {
    json rules = json::object();
    const int k = c.parent_count();
    for (uint32_t idx = 0; idx < c.rule_count(); ++idx)
        rules[context_string(idx, k)] = c.pref(idx) ? "1>0" : "0>1";
    return json{{"parents", c.parents().to_list()}, {"rules", std::move(rules)}};
}

std::string serialize_cpt(const Cpt& c) { return cpt_to_json(c).dump(2) + "\n"; }

std::string serialize_instance(const Instance& inst) {
    json cpts = json::array();
    for (const Cpt& c : inst.cpts()) cpts.push_back(cpt_to_json(c));
    return json{{"n", inst.n()}, {"cpts", std::move(cpts)}}.dump(2) + "\n";
}

json solve_report_to_json(const SolveReport& r) {
    json j{{"algorithm", r.algorithm},
           {"objective", r.objective},
           {"per_input", r.per_input},
           {"cpt", cpt_to_json(r.output)},
           {"wall_time_ms", r.wall_time_ms}};
    j["chosen_parents"] = r.chosen_parents ? json(r.chosen_parents->to_list()) : json(nullptr);
    return j;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("read failed for " + path);
    return buf.str();
}

void write_text_file_atomic(const std::string& path, const std::string& text) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp(target);
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write " + tmp.string());
        out << text;
        out.flush();
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw IoError("write failed for " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        std::error_code ec2;
        fs::remove(tmp, ec2);
        throw IoError("cannot move " + tmp.string() + " into place: " + ec.message());
    }
}

Instance load_instance(const std::string& path) {
    return parse_instance(read_text_file(path));
}

Cpt load_candidate_cpt(const std::string& path, int n) {
    const json j = parse_checked(read_text_file(path));
    if (j.is_object() && j.contains("cpt"))
        return cpt_from_json(j.at("cpt"), n); // a solve-report file
    return cpt_from_json(j, n);
}

} // namespace cpta
