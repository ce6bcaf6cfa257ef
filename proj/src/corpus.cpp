#include "svi/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <unordered_set>

#include "svi/rng.hpp"

namespace svi {

Document Document::from_pairs(std::vector<std::pair<int, int>> pairs) {
  std::map<int, long long> merged;
  for (const auto& [term, count] : pairs) merged[term] += count;
  Document doc;
  doc.counts.reserve(merged.size());
  for (const auto& [term, count] : merged) {
    doc.counts.emplace_back(term, static_cast<int>(count));
    doc.total += count;
  }
  return doc;
}

long long Corpus::total_tokens() const {
  long long n = 0;
  for (const auto& d : documents) n += d.total;
  return n;
}

namespace {

// Pulls the next whitespace-separated token, tracking line numbers for
// error messages.
struct TokenReader {
  std::istream& in;
  long line = 1;

  bool next(std::string& tok) {
    tok.clear();
    int c;
    while ((c = in.get()) != EOF) {
      if (c == '\n') {
        if (!tok.empty()) {
          in.unget();
          return true;
        }
        ++line;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        if (!tok.empty()) return true;
      } else {
        tok.push_back(static_cast<char>(c));
      }
    }
    return !tok.empty();
  }

  long long next_int(const char* what) {
    std::string tok;
    if (!next(tok)) {
      throw ParseError(std::string("line ") + std::to_string(line) +
                       ": expected " + what + ", found end of input");
    }
    try {
      size_t pos = 0;
      long long v = std::stoll(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      return v;
    } catch (const std::exception&) {
      throw ParseError(std::string("line ") + std::to_string(line) + ": bad " +
                       what + " '" + tok + "'");
    }
  }
};

}  // namespace

Corpus load_uci_bow(std::istream& docword, std::istream& vocab,
                    LoadReport* report) {
  TokenReader rd{docword};
  const long long D = rd.next_int("document count");
  const long long W = rd.next_int("vocabulary size");
  const long long NNZ = rd.next_int("non-zero count");
  if (D < 1 || W < 1 || NNZ < 0) {
    throw ParseError("line 1: malformed header (D=" + std::to_string(D) +
                     " W=" + std::to_string(W) + " NNZ=" + std::to_string(NNZ) +
                     ")");
  }

  std::vector<std::vector<std::pair<int, int>>> rows(D);
  for (long long i = 0; i < NNZ; ++i) {
    const long long doc_id = rd.next_int("docID");
    const long long term_id = rd.next_int("termID");
    const long long count = rd.next_int("count");
    const std::string at = "line " + std::to_string(rd.line) + ": ";
    if (doc_id < 1 || doc_id > D)
      throw ParseError(at + "docID " + std::to_string(doc_id) +
                       " out of range 1.." + std::to_string(D));
    if (term_id < 1 || term_id > W)
      throw ParseError(at + "termID " + std::to_string(term_id) +
                       " out of range 1.." + std::to_string(W));
    if (count < 1)
      throw ParseError(at + "count must be >= 1, got " + std::to_string(count));
    rows[doc_id - 1].emplace_back(static_cast<int>(term_id - 1),
                                  static_cast<int>(count));
  }

  Corpus corpus;
  corpus.documents.reserve(D);
  for (long long d = 0; d < D; ++d) {
    Document doc = Document::from_pairs(std::move(rows[d]));
    if (doc.empty() && report != nullptr)
      report->empty_documents.push_back(static_cast<int>(d));
    corpus.documents.push_back(std::move(doc));
  }

  std::string term;
  long vocab_line = 0;
  while (std::getline(vocab, term)) {
    ++vocab_line;
    if (!term.empty() && term.back() == '\r') term.pop_back();
    if (term.empty()) continue;
    corpus.vocabulary.terms.push_back(term);
  }
  if (corpus.vocabulary.size() != W) {
    throw ParseError("vocabulary has " +
                     std::to_string(corpus.vocabulary.size()) +
                     " terms but docword header declares " + std::to_string(W));
  }
  std::unordered_set<std::string> seen;
  for (const auto& t : corpus.vocabulary.terms) {
    if (!seen.insert(t).second)
      throw ParseError("duplicate vocabulary term '" + t + "'");
  }
  return corpus;
}

void save_uci_bow(const Corpus& corpus, std::ostream& docword,
                  std::ostream& vocab) {
  long long nnz = 0;
  for (const auto& d : corpus.documents) nnz += d.unique_terms();
  docword << corpus.num_documents() << "\n"
          << corpus.vocab_size() << "\n"
          << nnz << "\n";
  for (int d = 0; d < corpus.num_documents(); ++d) {
    for (const auto& [term, count] : corpus.documents[d].counts)
      docword << (d + 1) << " " << (term + 1) << " " << count << "\n";
  }
  for (const auto& t : corpus.vocabulary.terms) vocab << t << "\n";
}

HeldoutSplit split_heldout(const Document& doc, double heldout_fraction,
                           uint64_t seed) {
  if (doc.unique_terms() < 2)
    throw SplitError("split_heldout: document needs >= 2 unique terms");
  if (!(heldout_fraction > 0.0 && heldout_fraction < 1.0))
    throw SplitError("split_heldout: fraction must lie in (0,1)");

  const int U = doc.unique_terms();
  std::vector<int> order(U);
  for (int i = 0; i < U; ++i) order[i] = i;
  Rng rng(seed);
  for (int i = U - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.uniform_below(i + 1));
    std::swap(order[i], order[j]);
  }

  int n_heldout = static_cast<int>(std::ceil(heldout_fraction * U));
  n_heldout = std::min(n_heldout, U - 1);  // observed side stays non-empty

  std::vector<std::pair<int, int>> ho, obs;
  for (int i = 0; i < U; ++i) {
    const auto& entry = doc.counts[order[i]];
    (i < n_heldout ? ho : obs).push_back(entry);
  }
  return {Document::from_pairs(std::move(obs)), Document::from_pairs(std::move(ho))};
}

std::pair<Corpus, SyntheticTruth> generate_lda_corpus(int K, int V, int D,
                                                      int doc_length,
                                                      double alpha, double eta,
                                                      uint64_t seed) {
  if (K < 1 || V < 1 || D < 1 || doc_length < 1)
    throw std::invalid_argument("generate_lda_corpus: sizes must be >= 1");
  if (!(alpha > 0.0) || !(eta > 0.0))
    throw std::invalid_argument("generate_lda_corpus: alpha and eta must be > 0");

  Rng rng(seed);
  SyntheticTruth truth{Mat(K, V), Mat(D, K)};
  for (int k = 0; k < K; ++k) rng.dirichlet_symmetric(eta, truth.topics.row_span(k));

  Corpus corpus;
  corpus.vocabulary.terms.reserve(V);
  for (int v = 0; v < V; ++v) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "term%06d", v);
    corpus.vocabulary.terms.emplace_back(buf);
  }

  corpus.documents.reserve(D);
  std::vector<std::pair<int, int>> pairs;
  for (int d = 0; d < D; ++d) {
    rng.dirichlet_symmetric(alpha, truth.proportions.row_span(d));
    pairs.clear();
    for (int n = 0; n < doc_length; ++n) {
      const int z = rng.categorical(truth.proportions.row_span(d));
      const int w = rng.categorical(truth.topics.row_span(z));
      pairs.emplace_back(w, 1);
    }
    corpus.documents.push_back(Document::from_pairs(pairs));
  }
  return {std::move(corpus), std::move(truth)};
}

void write_row_stochastic_csv(const Mat& m, const std::string& value_prefix,
                              std::ostream& out) {
  out << "row";
  for (int c = 0; c < m.cols(); ++c) out << "," << value_prefix << c;
  out << "\n";
  char buf[32];
  for (int r = 0; r < m.rows(); ++r) {
    out << r;
    for (int c = 0; c < m.cols(); ++c) {
      std::snprintf(buf, sizeof(buf), "%.17g", m(r, c));
      out << "," << buf;
    }
    out << "\n";
  }
}

}  // namespace svi
