#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "svi/matrix.hpp"

namespace svi {

class Rng;

// Distinct term strings; index order defines the term ids used everywhere.
struct Vocabulary {
  std::vector<std::string> terms;

  int size() const { return static_cast<int>(terms.size()); }
};

// Bag-of-words document: sorted (term index, count) pairs with count >= 1.
struct Document {
  std::vector<std::pair<int, int>> counts;  // sorted by term index
  long long total = 0;                      // sum of counts (N_d)

  int unique_terms() const { return static_cast<int>(counts.size()); }
  bool empty() const { return counts.empty(); }

  // Builds a document from unsorted (term, count) pairs, merging duplicates.
  static Document from_pairs(std::vector<std::pair<int, int>> pairs);

  friend bool operator==(const Document&, const Document&) = default;
};

struct Corpus {
  Vocabulary vocabulary;
  std::vector<Document> documents;

  int num_documents() const { return static_cast<int>(documents.size()); }
  int vocab_size() const { return vocabulary.size(); }
  long long total_tokens() const;

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

struct HeldoutSplit {
  Document observed;
  Document heldout;
};

// Ground truth of a generated corpus: row-stochastic topics (K x V) and
// document proportions (D x K), kept for recovery tests.
struct SyntheticTruth {
  Mat topics;
  Mat proportions;
};

struct LoadReport {
  std::vector<int> empty_documents;  // 0-based ids of docs with no tokens
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};
struct SplitError : std::runtime_error {
  explicit SplitError(const std::string& msg) : std::runtime_error(msg) {}
};

// Reads UCI bag-of-words streams: docword holds three header integers
// (D, W, NNZ) followed by NNZ lines "docID termID count" with 1-based ids;
// vocab holds one term per line. Malformed input throws ParseError naming
// the offending line. Documents that receive no tokens are kept (empty) and
// listed in the report.
Corpus load_uci_bow(std::istream& docword, std::istream& vocab,
                    LoadReport* report = nullptr);

// Writes a corpus back in the same format (terms one per line in vocab).
void save_uci_bow(const Corpus& corpus, std::ostream& docword, std::ostream& vocab);

// Splits a document's unique terms into disjoint observed/heldout parts.
// The shuffled first ceil(fraction * U) unique terms (capped at U-1 so the
// observed part is never empty) go to heldout, with all their counts.
// Throws SplitError when the document has fewer than 2 unique terms.
HeldoutSplit split_heldout(const Document& doc, double heldout_fraction,
                           uint64_t seed);

// Samples a corpus from the LDA generative process: topics ~ Dir(eta),
// per-document proportions ~ Dir(alpha), tokens via z ~ Cat(theta),
// w ~ Cat(beta_z). Terms are named "term000000", ... Deterministic in seed.
std::pair<Corpus, SyntheticTruth> generate_lda_corpus(int K, int V, int D,
                                                      int doc_length,
                                                      double alpha, double eta,
                                                      uint64_t seed);

// Headered CSV with one row per topic and V value columns, 17 significant
// digits; used to export SyntheticTruth matrices.
void write_row_stochastic_csv(const Mat& m, const std::string& value_prefix,
                              std::ostream& out);

}  // namespace svi
