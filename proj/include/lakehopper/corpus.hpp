#pragma once

// Data-lake model and I/O: typed columns with ground-truth labels,
// deterministic splits, and a synthetic source/target lake-pair generator
// with controllable type-set overlap.
//
// On-disk layout of a lake directory:
//   <root>/tables/<table_id>.csv   RFC 4180, one file per table, no header row
//   <root>/labels.jsonl            one object per labeled column
//   <root>/manifest.json           type-set order + split membership

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "lakehopper/csv.hpp"
#include "lakehopper/errors.hpp"
#include "lakehopper/log.hpp"
#include "lakehopper/util.hpp"

namespace lakehopper {

struct SemanticType {
    int id = 0;
    std::string name;
};

// Canonical ordering is lexicographic by name; ids are dense 0..n-1 and
// define the output-layer column order of an annotator.
struct TypeSet {
    std::vector<SemanticType> types;

    static TypeSet from_names(std::vector<std::string> names) {
        std::sort(names.begin(), names.end());
        for (size_t i = 1; i < names.size(); ++i) {
            if (names[i] == names[i - 1]) {
                throw DataError("duplicate type name: " + names[i]);
            }
        }
        TypeSet ts;
        ts.types.reserve(names.size());
        for (size_t i = 0; i < names.size(); ++i) {
            ts.types.push_back({static_cast<int>(i), std::move(names[i])});
        }
        return ts;
    }

    int size() const { return static_cast<int>(types.size()); }

    const std::string& name_of(int id) const {
        if (id < 0 || id >= size()) throw DataError("type id out of range");
        return types[id].name;
    }

    std::optional<int> id_of(std::string_view name) const {
        auto it = std::lower_bound(types.begin(), types.end(), name,
                                   [](const SemanticType& t, std::string_view n) { return t.name < n; });
        if (it == types.end() || it->name != name) return std::nullopt;
        return it->id;
    }

    std::vector<std::string> names() const {
        std::vector<std::string> out;
        out.reserve(types.size());
        for (const auto& t : types) out.push_back(t.name);
        return out;
    }

    bool operator==(const TypeSet& other) const {
        if (types.size() != other.types.size()) return false;
        for (size_t i = 0; i < types.size(); ++i) {
            if (types[i].id != other.types[i].id || types[i].name != other.types[i].name) return false;
        }
        return true;
    }
};

struct Column {
    std::string table_id;
    int col_index = 0;
    std::vector<std::string> cells;
    std::optional<int> label;  // id into the lake's TypeSet
};

// Column ids (indices into DataLake::columns) per split.
struct SplitAssignment {
    std::vector<int> train;
    std::vector<int> valid;
    std::vector<int> test;

    bool empty() const { return train.empty() && valid.empty() && test.empty(); }
};

enum class Split { Train, Valid, Test };

inline const char* split_name(Split s) {
    switch (s) {
        case Split::Train: return "train";
        case Split::Valid: return "valid";
        default: return "test";
    }
}

struct DataLake {
    TypeSet type_set;
    std::vector<Column> columns;  // sorted by (table_id, col_index)
    SplitAssignment splits;

    std::vector<int> labeled_ids() const {
        std::vector<int> out;
        for (size_t i = 0; i < columns.size(); ++i) {
            if (columns[i].label) out.push_back(static_cast<int>(i));
        }
        return out;
    }

    const std::vector<int>& split_ids(Split s) const {
        switch (s) {
            case Split::Train: return splits.train;
            case Split::Valid: return splits.valid;
            default: return splits.test;
        }
    }

    // Splits must partition the labeled columns: disjoint, exhaustive.
    void validate_splits() const {
        std::set<int> seen;
        size_t total = 0;
        for (const auto* part : {&splits.train, &splits.valid, &splits.test}) {
            total += part->size();
            for (int id : *part) {
                if (id < 0 || id >= static_cast<int>(columns.size()) || !columns[id].label) {
                    throw DataError("split references non-labeled column id " + std::to_string(id));
                }
                if (!seen.insert(id).second) {
                    throw DataError("column id " + std::to_string(id) + " appears in two splits");
                }
            }
        }
        if (total != labeled_ids().size()) {
            throw DataError("splits do not cover all labeled columns");
        }
    }
};

struct IntRange {
    int min = 1;
    int max = 1;
};

// Controls gen_lake_pair. Shared types draw cells from the same per-type
// vocabulary in both lakes; per-type column counts follow a Zipf profile so
// long-tail types exist.
struct LakePairSpec {
    int n_source_types = 4;
    int n_target_types = 4;
    int n_shared_types = 2;
    IntRange columns_per_type{2, 30};
    IntRange cells_per_column{6, 20};
    double long_tail_skew = 0.0;  // Zipf exponent, 0 = uniform
    double noise_rate = 0.0;      // fraction of cells replaced with another type's token
    uint64_t seed = 0;

    void validate() const {
        if (n_source_types < 1 || n_target_types < 1) throw ConfigError("lake pair: type counts must be >= 1");
        if (n_shared_types < 0 || n_shared_types > std::min(n_source_types, n_target_types)) {
            throw ConfigError("lake pair: shared types must be <= min(source, target) types");
        }
        if (columns_per_type.min < 1 || columns_per_type.max < columns_per_type.min) {
            throw ConfigError("lake pair: bad columns_per_type range");
        }
        if (cells_per_column.min < 1 || cells_per_column.max < cells_per_column.min) {
            throw ConfigError("lake pair: bad cells_per_column range");
        }
        if (long_tail_skew < 0) throw ConfigError("lake pair: skew must be >= 0");
        if (noise_rate < 0 || noise_rate >= 1) throw ConfigError("lake pair: noise_rate must be in [0,1)");
    }
};

// ---------------------------------------------------------------------------
// splits

inline DataLake split_data_lake(const DataLake& lake, double train_frac, double valid_frac, uint64_t seed) {
    if (train_frac <= 0 || valid_frac <= 0 || train_frac + valid_frac >= 1) {
        throw ConfigError("split fractions must be positive and sum to < 1");
    }
    std::vector<int> ids = lake.labeled_ids();
    if (ids.size() < 3) throw DataError("too few labeled columns to populate train/valid/test");

    auto rng = make_rng(seed, "split");
    std::shuffle(ids.begin(), ids.end(), rng);

    size_t n = ids.size();
    size_t n_train = static_cast<size_t>(std::llround(train_frac * static_cast<double>(n)));
    size_t n_valid = static_cast<size_t>(std::llround(valid_frac * static_cast<double>(n)));
    n_train = std::max<size_t>(1, std::min(n_train, n - 2));
    n_valid = std::max<size_t>(1, std::min(n_valid, n - n_train - 1));

    DataLake out = lake;
    out.splits = {};
    out.splits.train.assign(ids.begin(), ids.begin() + n_train);
    out.splits.valid.assign(ids.begin() + n_train, ids.begin() + n_train + n_valid);
    out.splits.test.assign(ids.begin() + n_train + n_valid, ids.end());
    std::sort(out.splits.train.begin(), out.splits.train.end());
    std::sort(out.splits.valid.begin(), out.splits.valid.end());
    std::sort(out.splits.test.begin(), out.splits.test.end());
    out.validate_splits();
    return out;
}

// ---------------------------------------------------------------------------
// load / save

namespace detail {

inline bool safe_table_id(const std::string& id) {
    if (id.empty()) return false;
    for (char c : id) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' || c == '-';
        if (!ok) return false;
    }
    return true;
}

inline void sort_columns(std::vector<Column>& columns) {
    std::sort(columns.begin(), columns.end(), [](const Column& a, const Column& b) {
        if (a.table_id != b.table_id) return a.table_id < b.table_id;
        return a.col_index < b.col_index;
    });
}

}  // namespace detail

inline DataLake load_data_lake(const std::filesystem::path& root, const std::filesystem::path& labels_path) {
    namespace fs = std::filesystem;
    const fs::path tables_dir = root / "tables";
    if (!fs::exists(tables_dir)) throw DataError("missing tables directory: " + tables_dir.string());
    if (!fs::exists(labels_path)) throw DataError("missing labels file: " + labels_path.string());

    // table_id -> per-column cell lists
    std::map<std::string, std::vector<std::vector<std::string>>> tables;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(tables_dir)) {
        if (entry.path().extension() == ".csv") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& file : files) {
        std::ifstream in(file, std::ios::binary);
        if (!in) throw DataError("cannot open table file: " + file.string());
        auto records = read_csv(in);
        std::vector<std::vector<std::string>> cols;
        for (auto& record : records) {
            if (record.size() > cols.size()) cols.resize(record.size());
            for (size_t j = 0; j < record.size(); ++j) cols[j].push_back(std::move(record[j]));
        }
        tables.emplace(file.stem().string(), std::move(cols));
    }

    // labels: JSON Lines of {"table_id", "col_index", "type", "skip_header"}
    std::ifstream in(labels_path);
    std::map<std::pair<std::string, int>, std::string> labels;
    std::map<std::string, bool> skip_header;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        nlohmann::json row;
        try {
            row = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw DataError("labels line " + std::to_string(line_no) + ": " + e.what());
        }
        std::string table_id = row.at("table_id").get<std::string>();
        int col_index = row.at("col_index").get<int>();
        std::string type = row.at("type").get<std::string>();
        bool skip = row.value("skip_header", false);

        auto table_it = tables.find(table_id);
        if (table_it == tables.end()) throw DataError("label references unknown table: " + table_id);
        if (col_index < 0 || col_index >= static_cast<int>(table_it->second.size())) {
            throw DataError("label references unknown column " + std::to_string(col_index) + " of table " + table_id);
        }
        if (!labels.emplace(std::make_pair(table_id, col_index), type).second) {
            throw DataError("duplicate label row for " + table_id + ":" + std::to_string(col_index));
        }
        auto [it, inserted] = skip_header.emplace(table_id, skip);
        if (!inserted && it->second != skip) {
            throw DataError("inconsistent skip_header flags for table " + table_id);
        }
    }

    std::vector<std::string> type_names;
    for (const auto& [key, type] : labels) type_names.push_back(type);
    std::sort(type_names.begin(), type_names.end());
    type_names.erase(std::unique(type_names.begin(), type_names.end()), type_names.end());

    DataLake lake;
    lake.type_set = TypeSet::from_names(type_names);
    for (auto& [table_id, cols] : tables) {
        bool skip = false;
        if (auto it = skip_header.find(table_id); it != skip_header.end()) skip = it->second;
        for (size_t j = 0; j < cols.size(); ++j) {
            Column col;
            col.table_id = table_id;
            col.col_index = static_cast<int>(j);
            col.cells = std::move(cols[j]);
            if (skip && !col.cells.empty()) col.cells.erase(col.cells.begin());
            if (auto it = labels.find({table_id, col.col_index}); it != labels.end()) {
                col.label = lake.type_set.id_of(it->second);
            }
            lake.columns.push_back(std::move(col));
        }
    }
    detail::sort_columns(lake.columns);

    // optional manifest: authoritative type-set order and split membership
    const fs::path manifest_path = root / "manifest.json";
    if (fs::exists(manifest_path)) {
        std::ifstream min(manifest_path);
        nlohmann::json manifest;
        try {
            min >> manifest;
        } catch (const nlohmann::json::exception& e) {
            throw DataError(std::string("manifest: ") + e.what());
        }
        if (manifest.contains("type_set")) {
            auto names = manifest["type_set"].get<std::vector<std::string>>();
            TypeSet manifest_types = TypeSet::from_names(names);
            for (const auto& t : lake.type_set.types) {
                if (!manifest_types.id_of(t.name)) {
                    throw DataError("labels use type '" + t.name + "' missing from manifest type_set");
                }
            }
            // remap labels into the (possibly wider) manifest type set
            for (auto& col : lake.columns) {
                if (col.label) col.label = manifest_types.id_of(lake.type_set.name_of(*col.label));
            }
            lake.type_set = std::move(manifest_types);
        }
        if (manifest.contains("splits")) {
            std::map<std::pair<std::string, int>, int> index;
            for (size_t i = 0; i < lake.columns.size(); ++i) {
                index[{lake.columns[i].table_id, lake.columns[i].col_index}] = static_cast<int>(i);
            }
            auto read_part = [&](const char* key) {
                std::vector<int> ids;
                for (const auto& ref : manifest["splits"].at(key)) {
                    std::string tid = ref.at(0).get<std::string>();
                    int ci = ref.at(1).get<int>();
                    auto it = index.find({tid, ci});
                    if (it == index.end()) throw DataError("manifest split references unknown column " + tid);
                    ids.push_back(it->second);
                }
                std::sort(ids.begin(), ids.end());
                return ids;
            };
            lake.splits.train = read_part("train");
            lake.splits.valid = read_part("valid");
            lake.splits.test = read_part("test");
            lake.validate_splits();
        }
    }

    // every type should appear in >= 1 labeled column
    std::vector<int> support(lake.type_set.size(), 0);
    for (const auto& col : lake.columns) {
        if (col.label) ++support[*col.label];
    }
    for (const auto& t : lake.type_set.types) {
        if (support[t.id] == 0) log_warn("type '" + t.name + "' has no labeled column in lake " + root.string());
    }
    return lake;
}

inline void save_data_lake(const DataLake& lake, const std::filesystem::path& root) {
    namespace fs = std::filesystem;

    // table_id -> columns, validated before anything is written
    std::map<std::string, std::vector<const Column*>> tables;
    for (const auto& col : lake.columns) {
        if (col.label && col.cells.empty()) {
            throw DataError("column " + col.table_id + ":" + std::to_string(col.col_index) +
                            " is labeled but has no cells");
        }
        if (!detail::safe_table_id(col.table_id)) {
            throw DataError("table id not usable as file name: '" + col.table_id + "'");
        }
        tables[col.table_id].push_back(&col);
    }
    for (auto& [table_id, cols] : tables) {
        std::sort(cols.begin(), cols.end(), [](const Column* a, const Column* b) { return a->col_index < b->col_index; });
        for (size_t j = 0; j < cols.size(); ++j) {
            if (cols[j]->col_index != static_cast<int>(j)) {
                throw DataError("table " + table_id + " has non-contiguous column indices");
            }
            if (cols[j]->cells.size() != cols[0]->cells.size()) {
                throw DataError("table " + table_id + " is ragged; cannot be saved losslessly");
            }
        }
    }

    fs::create_directories(root / "tables");
    for (const auto& [table_id, cols] : tables) {
        std::vector<CsvRecord> records(cols.empty() ? 0 : cols[0]->cells.size());
        for (const Column* col : cols) {
            for (size_t r = 0; r < col->cells.size(); ++r) records[r].push_back(col->cells[r]);
        }
        std::ofstream out(root / "tables" / (table_id + ".csv"), std::ios::binary);
        if (!out) throw DataError("cannot write table file for " + table_id);
        write_csv(out, records);
    }

    {
        std::ofstream out(root / "labels.jsonl", std::ios::binary);
        if (!out) throw DataError("cannot write labels file");
        for (const auto& col : lake.columns) {
            if (!col.label) continue;
            nlohmann::json row = {
                {"table_id", col.table_id},
                {"col_index", col.col_index},
                {"type", lake.type_set.name_of(*col.label)},
                {"skip_header", false},
            };
            out << row.dump() << '\n';
        }
    }

    {
        auto part_refs = [&](const std::vector<int>& ids) {
            nlohmann::json arr = nlohmann::json::array();
            for (int id : ids) {
                arr.push_back({lake.columns[id].table_id, lake.columns[id].col_index});
            }
            return arr;
        };
        nlohmann::json manifest = {
            {"format", "lakehopper-lake"},
            {"version", 1},
            {"type_set", lake.type_set.names()},
            {"splits",
             {{"train", part_refs(lake.splits.train)},
              {"valid", part_refs(lake.splits.valid)},
              {"test", part_refs(lake.splits.test)}}},
        };
        std::ofstream out(root / "manifest.json", std::ios::binary);
        if (!out) throw DataError("cannot write manifest");
        out << manifest.dump(2) << '\n';
    }
}

// ---------------------------------------------------------------------------
// synthetic lake-pair generator

namespace detail {

// Deterministic pseudo-realistic type names; synthesized names take over
// when a spec asks for more.
inline std::vector<std::string> type_name_pool() {
    return {
        "address",  "airline",  "airport",   "album",    "animal",   "artist",   "author",  "birthdate",
        "brand",    "capacity", "city",      "code",     "company",  "country",  "county",  "currency",
        "day",      "director", "duration",  "film",     "game",     "genre",    "grade",   "height",
        "industry", "isbn",     "language",  "latitude", "league",   "longitude","maker",   "model",
        "month",    "name",     "nationality","notes",   "origin",   "person",   "phone",   "plays",
        "position", "product",  "publisher", "rank",     "rating",   "region",   "religion","requirement",
        "result",   "sales",    "scientist", "season",   "sex",      "species",  "state",   "status",
        "symbol",   "team",     "type",      "university","weight",  "year",     "zipcode", "zone",
    };
}

// Per-type cell generator. Parameters derive from the type NAME and the pair
// seed only, so shared types emit cells from the same vocabulary in both
// lakes.
class CellModel {
  public:
    CellModel(const std::string& type_name, uint64_t pair_seed) {
        uint64_t h = fnv1a64(type_name, fnv1a64(&pair_seed, sizeof(pair_seed)));
        style_ = static_cast<int>(h % 4);
        auto rng = std::mt19937_64(h);
        static const char* syllables[] = {"ba", "co", "da", "el", "fi", "go", "ha", "ji", "ka", "lo", "mi",
                                          "na", "or", "pa", "qu", "ri", "sa", "tu", "ve", "wo", "xe", "zy"};
        const int n_syll = static_cast<int>(std::size(syllables));
        std::uniform_int_distribution<int> pick_syll(0, n_syll - 1);
        std::uniform_int_distribution<int> pick_len(2, 3);
        vocab_.reserve(32);
        for (int i = 0; i < 32; ++i) {
            std::string word;
            int len = pick_len(rng);
            for (int s = 0; s < len; ++s) word += syllables[pick_syll(rng)];
            vocab_.push_back(std::move(word));
        }
        std::uniform_int_distribution<int> base(0, 8999);
        numeric_base_ = 100 + base(rng) * 7;
        prefix_ = vocab_[0].substr(0, 2);
        for (auto& c : prefix_) c = static_cast<char>(c - 'a' + 'A');
    }

    std::string sample(std::mt19937_64& rng) const {
        switch (style_) {
            case 0: {  // word phrase
                std::uniform_int_distribution<int> n_words(1, 3);
                std::uniform_int_distribution<size_t> pick(0, vocab_.size() - 1);
                std::vector<std::string> words;
                int n = n_words(rng);
                for (int i = 0; i < n; ++i) words.push_back(vocab_[pick(rng)]);
                return join(words, " ");
            }
            case 1: {  // integer quantity from a type-specific range
                std::uniform_int_distribution<int> off(0, 999);
                return std::to_string(numeric_base_ + off(rng));
            }
            case 2: {  // decimal measurement
                std::uniform_int_distribution<int> whole(0, 999);
                std::uniform_int_distribution<int> frac(0, 99);
                char buf[32];
                std::snprintf(buf, sizeof(buf), "%d.%02d", numeric_base_ % 1000 + whole(rng), frac(rng));
                return buf;
            }
            default: {  // code-like: two type letters + digits
                std::uniform_int_distribution<int> num(1000, 9999);
                return prefix_ + "-" + std::to_string(num(rng));
            }
        }
    }

    // a single vocabulary token, used to corrupt cells of other types
    std::string noise_token(std::mt19937_64& rng) const {
        std::uniform_int_distribution<size_t> pick(0, vocab_.size() - 1);
        switch (style_) {
            case 1:
            case 2: return std::to_string(numeric_base_);
            case 3: return prefix_ + "-" + std::to_string(1000 + static_cast<int>(pick(rng)));
            default: return vocab_[pick(rng)];
        }
    }

  private:
    int style_;
    std::vector<std::string> vocab_;
    int numeric_base_;
    std::string prefix_;
};

// Zipf column counts: rank r (0 = most frequent) gets
// clamp(round(max * (r+1)^-skew), min, max).
inline std::vector<int> zipf_counts(int n_types, const IntRange& range, double skew) {
    std::vector<int> counts(n_types);
    for (int r = 0; r < n_types; ++r) {
        double w = std::pow(static_cast<double>(r + 1), -skew);
        int c = static_cast<int>(std::llround(range.max * w));
        counts[r] = std::clamp(c, range.min, range.max);
    }
    return counts;
}

inline DataLake gen_one_lake(const std::vector<std::string>& type_names,
                             const std::map<std::string, CellModel>& models,
                             const LakePairSpec& spec, const std::string& lake_tag, uint64_t lake_seed) {
    DataLake lake;
    lake.type_set = TypeSet::from_names(type_names);

    // ranks are shuffled so shared types are not systematically head types
    std::vector<int> rank_of(type_names.size());
    for (size_t i = 0; i < rank_of.size(); ++i) rank_of[i] = static_cast<int>(i);
    auto rank_rng = make_rng(lake_seed, "ranks");
    std::shuffle(rank_of.begin(), rank_of.end(), rank_rng);
    std::vector<int> counts = zipf_counts(lake.type_set.size(), spec.columns_per_type, spec.long_tail_skew);

    // (type id, serial) for every column to generate, then shuffled so tables
    // mix types
    std::vector<std::pair<int, int>> pending;
    for (int t = 0; t < lake.type_set.size(); ++t) {
        for (int c = 0; c < counts[rank_of[t]]; ++c) pending.emplace_back(t, c);
    }
    auto mix_rng = make_rng(lake_seed, "mix");
    std::shuffle(pending.begin(), pending.end(), mix_rng);

    auto table_rng = make_rng(lake_seed, "tables");
    std::uniform_int_distribution<int> table_width(2, 5);
    std::uniform_int_distribution<int> rows_dist(spec.cells_per_column.min, spec.cells_per_column.max);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> other_type(0, lake.type_set.size() - 1);

    size_t next = 0;
    int table_no = 0;
    while (next < pending.size()) {
        int width = std::min<int>(table_width(table_rng), static_cast<int>(pending.size() - next));
        int rows = rows_dist(table_rng);
        char tid[32];
        std::snprintf(tid, sizeof(tid), "%s%04d", lake_tag.c_str(), table_no++);
        for (int j = 0; j < width; ++j) {
            auto [type_id, serial] = pending[next++];
            const CellModel& model = models.at(lake.type_set.name_of(type_id));
            auto cell_rng = make_rng(lake_seed, "cells", fnv1a64(lake.type_set.name_of(type_id)) + serial);
            Column col;
            col.table_id = tid;
            col.col_index = j;
            col.label = type_id;
            col.cells.reserve(rows);
            for (int r = 0; r < rows; ++r) {
                std::string cell = model.sample(cell_rng);
                if (spec.noise_rate > 0 && unit(cell_rng) < spec.noise_rate && lake.type_set.size() > 1) {
                    int other = other_type(cell_rng);
                    if (other == type_id) other = (other + 1) % lake.type_set.size();
                    cell = models.at(lake.type_set.name_of(other)).noise_token(cell_rng);
                }
                col.cells.push_back(std::move(cell));
            }
            lake.columns.push_back(std::move(col));
        }
    }
    detail::sort_columns(lake.columns);
    return split_data_lake(lake, 0.8, 0.1, derive_seed(lake_seed, "lake-split"));
}

}  // namespace detail

inline std::pair<DataLake, DataLake> gen_lake_pair(const LakePairSpec& spec) {
    spec.validate();

    std::vector<std::string> pool = detail::type_name_pool();
    int needed = spec.n_source_types + spec.n_target_types - spec.n_shared_types;
    for (int i = static_cast<int>(pool.size()); i < needed; ++i) {
        char buf[16];
        std::snprintf(buf, sizeof(buf), "type_%03d", i);
        pool.push_back(buf);
    }
    auto name_rng = make_rng(spec.seed, "names");
    std::shuffle(pool.begin(), pool.end(), name_rng);

    std::vector<std::string> source_names, target_names;
    int at = 0;
    for (int i = 0; i < spec.n_shared_types; ++i, ++at) {
        source_names.push_back(pool[at]);
        target_names.push_back(pool[at]);
    }
    for (int i = spec.n_shared_types; i < spec.n_source_types; ++i, ++at) source_names.push_back(pool[at]);
    for (int i = spec.n_shared_types; i < spec.n_target_types; ++i, ++at) target_names.push_back(pool[at]);

    std::map<std::string, detail::CellModel> models;
    for (const auto& name : source_names) models.emplace(name, detail::CellModel(name, spec.seed));
    for (const auto& name : target_names) models.try_emplace(name, detail::CellModel(name, spec.seed));

    DataLake source = detail::gen_one_lake(source_names, models, spec, "s", derive_seed(spec.seed, "source"));
    DataLake target = detail::gen_one_lake(target_names, models, spec, "t", derive_seed(spec.seed, "target"));
    return {std::move(source), std::move(target)};
}

}  // namespace lakehopper
