#include "lls/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_set>

#include "json.hpp"
#include "lls/unicode.hpp"

namespace lls {

using nlohmann::ordered_json;

LabelSpace::LabelSpace(std::vector<std::string> names) : labels(std::move(names)) {
    if (labels.size() < 2) throw Error("label space needs at least 2 labels");
    std::unordered_set<std::string> seen;
    for (const auto& l : labels) {
        if (!seen.insert(l).second) throw Error("duplicate label '" + l + "' in label space");
    }
}

int LabelSpace::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == name) return static_cast<int>(i);
    }
    return -1;
}

const std::string& LabelSpace::name(int index) const {
    if (index < 0 || static_cast<std::size_t>(index) >= labels.size()) {
        throw Error("label index " + std::to_string(index) + " out of range");
    }
    return labels[static_cast<std::size_t>(index)];
}

LabelSpace LabelSpace::parse(std::string_view csv) {
    std::vector<std::string> names;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        const std::size_t comma = csv.find(',', pos);
        const std::string_view item =
            csv.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        if (item.empty()) throw Error("empty label in label list");
        names.emplace_back(item);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return LabelSpace(std::move(names));
}

bool Dataset::pair_task() const {
    if (examples.empty()) return false;
    return std::all_of(examples.begin(), examples.end(), [](const Example& e) { return e.is_pair(); });
}

void Dataset::recount_labels() {
    label_counts.assign(labels.size(), 0);
    for (const auto& e : examples) label_counts[static_cast<std::size_t>(e.label)]++;
}

Tokens tokenize(std::string_view text, const TokenizerSpec& spec) {
    std::string folded;
    if (spec.lowercase) {
        folded = unicode::to_lower_ascii(text);
        text = folded;
    }
    Tokens out;
    switch (spec.mode) {
        case TokenizerMode::PreTokenized:
            // Pre-tokenized input never reaches this path through the loader;
            // fall back to whitespace so the function stays total.
        case TokenizerMode::Whitespace: {
            std::string current;
            std::size_t i = 0;
            const auto cps = unicode::decode_utf8(text);
            // Re-walk the bytes alongside the code points to slice tokens.
            std::size_t byte = 0;
            for (char32_t cp : cps) {
                std::size_t next = byte + 1;
                while (next < text.size() && (static_cast<unsigned char>(text[next]) & 0xC0) == 0x80) ++next;
                if (unicode::is_space(cp)) {
                    if (!current.empty()) {
                        out.push_back(std::move(current));
                        current.clear();
                    }
                } else {
                    current.append(text.substr(byte, next - byte));
                }
                byte = next;
                ++i;
            }
            if (!current.empty()) out.push_back(std::move(current));
            break;
        }
        case TokenizerMode::Char:
            out = unicode::grapheme_clusters(text);
            break;
    }
    return out;
}

namespace {

std::string label_to_string(const ordered_json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw Error("label must be a string or integer");
}

Tokens tokens_field(const ordered_json& v, const TokenizerSpec& spec) {
    Tokens toks = v.get<Tokens>();
    if (spec.lowercase) {
        for (auto& t : toks) t = unicode::to_lower_ascii(t);
    }
    return toks;
}

}  // namespace

Dataset load_dataset(const std::string& path, const TokenizerSpec& tokenizer, const LabelSpace& labels) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open dataset file: " + path);
    if (labels.size() < 2) throw Error("label space needs at least 2 labels");

    Dataset ds;
    ds.labels = labels;
    ds.label_counts.assign(labels.size(), 0);

    std::unordered_set<std::string> seen_ids;
    std::string line;
    std::size_t line_no = 0;
    int pair_state = -1;  // -1 unknown, 0 single, 1 pair
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        ordered_json rec;
        try {
            rec = ordered_json::parse(line);
        } catch (const std::exception& e) {
            throw Error(path + ":" + std::to_string(line_no) + ": malformed record: " + e.what());
        }
        const std::string at_line = path + ":" + std::to_string(line_no) + ": ";
        if (!rec.is_object() || !rec.contains("id") || !rec.contains("text_a") || !rec.contains("label")) {
            throw Error(at_line + "malformed record: id, text_a and label are required");
        }

        Example ex;
        try {
            ex.id = rec.at("id").get<std::string>();
            ex.text_a = rec.at("text_a").get<std::string>();
            if (rec.contains("text_b") && !rec.at("text_b").is_null()) {
                ex.text_b = rec.at("text_b").get<std::string>();
            }
        } catch (const std::exception& e) {
            throw Error(at_line + "malformed record: " + e.what());
        }
        if (ex.id.empty()) throw Error(at_line + "empty id");
        if (!seen_ids.insert(ex.id).second) throw Error(at_line + "duplicate id '" + ex.id + "'");

        const std::string label_name = label_to_string(rec.at("label"));
        ex.label = labels.index_of(label_name);
        if (ex.label < 0) throw Error(at_line + "unknown label '" + label_name + "'");

        if (tokenizer.mode == TokenizerMode::PreTokenized) {
            if (!rec.contains("tokens_a")) {
                throw Error(at_line + "pre-tokenized mode requires a tokens_a field");
            }
            ex.tokens_a = tokens_field(rec.at("tokens_a"), tokenizer);
            if (ex.text_b) {
                if (!rec.contains("tokens_b") || rec.at("tokens_b").is_null()) {
                    throw Error(at_line + "pre-tokenized pair record requires tokens_b");
                }
                ex.tokens_b = tokens_field(rec.at("tokens_b"), tokenizer);
            }
        } else {
            ex.tokens_a = tokenize(ex.text_a, tokenizer);
            if (ex.text_b) ex.tokens_b = tokenize(*ex.text_b, tokenizer);
        }
        if (ex.tokens_a.empty()) throw Error(at_line + "tokens_a is empty after tokenization");
        if (ex.tokens_b.has_value() != ex.text_b.has_value()) {
            throw Error(at_line + "tokens_b present without text_b");
        }

        const int is_pair = ex.is_pair() ? 1 : 0;
        if (pair_state == -1) {
            pair_state = is_pair;
        } else if (pair_state != is_pair) {
            throw Error(at_line + "mixed single-sentence and pair records in one dataset");
        }

        ds.label_counts[static_cast<std::size_t>(ex.label)]++;
        ds.examples.push_back(std::move(ex));
    }
    return ds;
}

void save_dataset(const Dataset& dataset, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write dataset file: " + path);
    for (const auto& ex : dataset.examples) {
        ordered_json rec;
        rec["id"] = ex.id;
        rec["text_a"] = ex.text_a;
        rec["text_b"] = ex.text_b ? ordered_json(*ex.text_b) : ordered_json(nullptr);
        rec["label"] = dataset.labels.name(ex.label);
        rec["tokens_a"] = ex.tokens_a;
        if (ex.tokens_b) rec["tokens_b"] = *ex.tokens_b;
        out << rec.dump() << '\n';
    }
    if (!out) throw Error("failed writing dataset file: " + path);
}

}  // namespace lls
