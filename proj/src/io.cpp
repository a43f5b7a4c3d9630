#include "ringlab/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ringlab {

namespace {

using json = nlohmann::ordered_json;
using ordered_json = nlohmann::ordered_json;

json table_to_rows(std::span<const elem_t> table, std::size_t n) {
    json rows = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < n; ++j) row.push_back(table[i * n + j]);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<elem_t> rows_to_table(const json& rows, std::size_t n, const char* what) {
    if (!rows.is_array() || rows.size() != n)
        throw IoError(std::string(what) + " table must have one row per element");
    std::vector<elem_t> table;
    table.reserve(n * n);
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != n)
            throw IoError(std::string(what) + " table row has wrong length");
        for (const auto& v : row) {
            if (!v.is_number_unsigned() || v.get<std::size_t>() > kHardOrderCap)
                throw IoError(std::string(what) + " table entry out of range");
            table.push_back(static_cast<elem_t>(v.get<std::size_t>()));
        }
    }
    return table;
}

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw IoError("malformed JSON");
    return j;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    out << text;
    if (!out) throw IoError("short write to " + path.string());
}

json verdict_to_json(Verdict v) {
    if (is_skipped(v)) return nullptr;
    return is_yes(v);
}

Verdict verdict_from_json(const json& j) {
    if (j.is_null()) return Verdict::skipped;
    if (!j.is_boolean()) throw IoError("verdict must be true, false or null");
    return j.get<bool>() ? Verdict::yes : Verdict::no;
}

}  // namespace

std::string ring_to_json(const FiniteRing& r) {
    ordered_json j;
    j["order"] = r.order();
    j["zero"] = r.zero();
    j["one"] = r.one();
    j["add"] = table_to_rows(r.add_table(), r.order());
    j["mul"] = table_to_rows(r.mul_table(), r.order());
    j["label"] = r.label();
    return j.dump(2) + "\n";
}

FiniteRing ring_from_json(const std::string& text, const RingLimits& limits) {
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("order") || !j.contains("add") || !j.contains("mul") ||
        !j.contains("zero") || !j.contains("one"))
        throw IoError("ring JSON must carry order, zero, one, add, mul");
    std::size_t n = j["order"].get<std::size_t>();
    if (n == 0 || n > kHardOrderCap) throw IoError("ring order out of range");
    return validate_ring(n, rows_to_table(j["add"], n, "add"), rows_to_table(j["mul"], n, "mul"),
                         static_cast<elem_t>(j["zero"].get<std::size_t>()),
                         static_cast<elem_t>(j["one"].get<std::size_t>()), limits,
                         j.value("label", std::string{}));
}

void save_ring(const FiniteRing& r, const std::filesystem::path& path) {
    write_file(path, ring_to_json(r));
}

FiniteRing load_ring(const std::filesystem::path& path, const RingLimits& limits) {
    return ring_from_json(read_file(path), limits);
}

std::string group_to_json(const FiniteGroup& g) {
    ordered_json j;
    j["order"] = g.order();
    j["identity"] = g.identity();
    json rows = json::array();
    for (std::size_t i = 0; i < g.order(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < g.order(); ++k)
            row.push_back(g.op(static_cast<elem_t>(i), static_cast<elem_t>(k)));
        rows.push_back(std::move(row));
    }
    j["cayley"] = std::move(rows);
    return j.dump(2) + "\n";
}

FiniteGroup group_from_json(const std::string& text, const RingLimits& limits) {
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("order") || !j.contains("cayley") ||
        !j.contains("identity"))
        throw IoError("group JSON must carry order, identity, cayley");
    std::size_t m = j["order"].get<std::size_t>();
    if (m == 0 || m > kHardOrderCap) throw IoError("group order out of range");
    return validate_group(rows_to_table(j["cayley"], m, "cayley"),
                          static_cast<elem_t>(j["identity"].get<std::size_t>()), limits);
}

void save_group(const FiniteGroup& g, const std::filesystem::path& path) {
    write_file(path, group_to_json(g));
}

FiniteGroup load_group(const std::filesystem::path& path, const RingLimits& limits) {
    return group_from_json(read_file(path), limits);
}

namespace {

ordered_json record_body(const ClassificationRecord& rec, const std::string& expression) {
    ordered_json j;
    j["expression"] = expression;
    j["order"] = rec.order;
    j["characteristic"] = rec.characteristic;
    for (const auto& f : verdict_fields()) j[f.name] = verdict_to_json(rec.*(f.member));
    return j;
}

}  // namespace

std::string record_to_json(const ClassificationRecord& rec, const std::string& expression,
                           int indent) {
    return record_body(rec, expression).dump(indent) + "\n";
}

std::string census_csv(Engine& engine, const Catalog& catalog) {
    std::ostringstream out;
    out << "expression,order,characteristic";
    for (const auto& f : verdict_fields()) out << "," << f.name;
    out << "\n";
    for (const auto& e : catalog.entries) {
        const ClassificationRecord& rec = engine.classify(e.ring);
        out << "\"" << e.expr << "\"," << rec.order << "," << rec.characteristic;
        for (const auto& f : verdict_fields()) {
            Verdict v = rec.*(f.member);
            out << "," << (is_skipped(v) ? "skipped" : is_yes(v) ? "true" : "false");
        }
        out << "\n";
    }
    return out.str();
}

std::string census_json(Engine& engine, const Catalog& catalog, int indent) {
    json rows = json::array();
    for (const auto& e : catalog.entries)
        rows.push_back(record_body(engine.classify(e.ring), e.expr));
    return rows.dump(indent) + "\n";
}

namespace {

ordered_json config_to_json(const CatalogConfig& cfg) {
    ordered_json j;
    j["max_order"] = cfg.max_order;
    j["base_zn"] = cfg.base_zn;
    json gf = json::array();
    for (auto [p, k] : cfg.base_gf) gf.push_back(json::array({p, k}));
    j["base_gf"] = std::move(gf);
    j["derived_from_order"] = cfg.derived_from_order;
    j["extra_exprs"] = cfg.extra_exprs;
    return j;
}

}  // namespace

std::string report_to_json(const Report& report, int indent) {
    ordered_json j;
    j["catalog_size"] = report.catalog_size;
    json claims = json::array();
    for (const auto& c : report.claims) {
        ordered_json cj;
        cj["id"] = c.id;
        cj["anchor"] = c.anchor;
        cj["subjects"] = c.subjects;
        cj["pass"] = c.pass;
        cj["fail"] = c.fail;
        cj["skipped"] = c.skipped;
        cj["not_applicable"] = c.not_applicable;
        json witnesses = json::array();
        for (const auto& f : c.failures) {
            ordered_json w;
            w["subject"] = f.subject;
            w["witness"] = f.witness;
            w["elements"] = f.witness_elems;
            witnesses.push_back(std::move(w));
        }
        cj["witnesses"] = std::move(witnesses);
        claims.push_back(std::move(cj));
    }
    j["claims"] = std::move(claims);
    j["config"] = config_to_json(report.config);
    return j.dump(indent) + "\n";
}

std::string report_to_table(const Report& report) {
    std::ostringstream out;
    out << "claim         subjects   pass   fail  skipped     n/a\n";
    for (const auto& c : report.claims) {
        out << c.id;
        for (std::size_t i = c.id.size(); i < 12; ++i) out << ' ';
        auto col = [&](std::size_t v) {
            std::string s = std::to_string(v);
            for (std::size_t i = s.size(); i < 8; ++i) out << ' ';
            out << s;
        };
        col(c.subjects);
        col(c.pass);
        col(c.fail);
        col(c.skipped);
        col(c.not_applicable);
        out << "\n";
        // failures are candidate counterexamples; print how to re-examine them
        for (const auto& f : c.failures)
            out << "    FAIL " << f.subject << ": " << f.witness << "\n"
                << "         re-check: ringlab verify --claims " << c.id
                << "  /  ringlab describe '" << f.subject << "'\n";
    }
    out << "catalog size: " << report.catalog_size << ", total failures: "
        << report.total_failures() << "\n";
    return out.str();
}

namespace {

class DiskRecordStore : public Engine::RecordStore {
public:
    explicit DiskRecordStore(std::filesystem::path dir) : dir_(std::move(dir)) {
        std::filesystem::create_directories(dir_);
    }

    bool load(std::uint64_t hash, std::size_t threshold, ClassificationRecord& out) override {
        std::filesystem::path p = path_for(hash);
        std::error_code ec;
        if (!std::filesystem::exists(p, ec)) return false;
        try {
            json j = parse_json(read_file(p));
            if (j.value("engine_version", std::string{}) != kEngineVersion) return false;
            if (j.value("expensive_order_threshold", std::size_t{0}) != threshold) return false;
            const json& body = j.at("record");
            ClassificationRecord rec;
            rec.ring_hash = hash;
            rec.order = body.at("order").get<std::size_t>();
            rec.characteristic = body.at("characteristic").get<std::size_t>();
            rec.expensive_order_threshold = threshold;
            for (const auto& f : verdict_fields())
                rec.*(f.member) = verdict_from_json(body.at(f.name));
            out = rec;
            return true;
        } catch (const std::exception&) {
            return false;  // stale or tampered entries are simply ignored
        }
    }

    void store(const ClassificationRecord& rec) override {
        ordered_json body;
        body["order"] = rec.order;
        body["characteristic"] = rec.characteristic;
        for (const auto& f : verdict_fields()) body[f.name] = verdict_to_json(rec.*(f.member));
        ordered_json j;
        j["engine_version"] = kEngineVersion;
        j["ring_hash"] = detail::hash_hex(rec.ring_hash);
        j["expensive_order_threshold"] = rec.expensive_order_threshold;
        j["record"] = std::move(body);
        write_file(path_for(rec.ring_hash), j.dump(2) + "\n");
    }

private:
    std::filesystem::path path_for(std::uint64_t hash) const {
        return dir_ / (detail::hash_hex(hash) + ".json");
    }
    std::filesystem::path dir_;
};

}  // namespace

std::shared_ptr<Engine::RecordStore> make_disk_record_store(const std::filesystem::path& dir) {
    return std::make_shared<DiskRecordStore>(dir);
}

}  // namespace ringlab
