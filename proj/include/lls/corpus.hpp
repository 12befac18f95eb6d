#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lls/error.hpp"

namespace lls {

using Tokens = std::vector<std::string>;

/// Ordered label universe. Declaration order is the deterministic
/// tie-break order everywhere an argmax over labels can tie.
struct LabelSpace {
    std::vector<std::string> labels;

    LabelSpace() = default;
    explicit LabelSpace(std::vector<std::string> names);

    int index_of(std::string_view name) const;  // -1 if absent
    const std::string& name(int index) const;
    std::size_t size() const { return labels.size(); }
    bool operator==(const LabelSpace&) const = default;

    /// Parses "L0,L1[,...]" as used by the CLI --labels flag.
    static LabelSpace parse(std::string_view csv);
};

enum class TokenizerMode { Whitespace, PreTokenized, Char };

struct TokenizerSpec {
    TokenizerMode mode = TokenizerMode::Whitespace;
    bool lowercase = false;
    std::optional<std::set<std::string>> stopword_list;  // carried config; never applied to bias statistics
};

/// One labeled instance. `label` is an index into the dataset's LabelSpace.
struct Example {
    std::string id;
    std::string text_a;
    std::optional<std::string> text_b;
    int label = -1;
    Tokens tokens_a;
    std::optional<Tokens> tokens_b;

    bool is_pair() const { return text_b.has_value(); }
    bool operator==(const Example&) const = default;
};

struct Dataset {
    std::vector<Example> examples;
    LabelSpace labels;
    std::vector<std::size_t> label_counts;  // examples per label, aligned to labels

    std::size_t size() const { return examples.size(); }
    bool pair_task() const;  // true iff non-empty and every example has a second sentence
    void recount_labels();
};

/// Pure, deterministic tokenization. Whitespace mode splits on Unicode
/// whitespace; char mode yields one token per extended grapheme cluster.
/// Empty text yields an empty sequence.
Tokens tokenize(std::string_view text, const TokenizerSpec& spec);

/// Loads a UTF-8 line-delimited dataset. One JSON object per line with fields
/// id, text_a, text_b (string or null), label (string or integer) and optional
/// tokens_a / tokens_b arrays (required in pre-tokenized mode).
/// Errors carry the offending line number / label / id.
Dataset load_dataset(const std::string& path, const TokenizerSpec& tokenizer, const LabelSpace& labels);

/// Writes the dataset in the same line-delimited format, including token
/// arrays, so a pre-tokenized reload reproduces it field-for-field.
void save_dataset(const Dataset& dataset, const std::string& path);

}  // namespace lls
