#ifndef DACOSTA_CORPUS_HPP
#define DACOSTA_CORPUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "dacosta/calculus.hpp"

namespace dacosta {

enum class BinOp { Imp, And, Or };
const char* to_string(BinOp op);  // "IMP", "AND", "OR"
Formula apply_op(BinOp op, const Formula& a, const Formula& b);
const std::vector<BinOp>& all_binops();

/// A^k for k >= 1 and A itself for k = 0.
Formula pow0(const Formula& base, int k);

/// Schematic statement of a corpus theorem, e.g. "NEFQ", "CLUB_2_AND",
/// "RED12_3". nullopt for names outside the corpus.
std::optional<MetaFormula> corpus_statement(const std::string& name);

/// System a corpus theorem is checked in.
SystemDef corpus_system(const std::string& name);

/// Every corpus script in dependency order.
const std::vector<std::string>& corpus_order();
/// Corpus theorems without a parameter n.
const std::vector<std::string>& static_corpus_names();
/// "NEFQ" -> "nefq.prf".
std::string corpus_file_name(const std::string& name);

/// Builds the script for a corpus theorem. Throws Error for unknown names.
ProofScript generate_script(const std::string& name);

struct CorpusRecord {
  std::string name;
  std::string system;  // label, e.g. "mZnSplit" or "mZn n=1"
  int n = 0;           // parameter of the theorem family, 0 if none
  bool accepted = false;
  std::string source;  // file path
  std::vector<Failure> failures;
  std::string error;   // file-level problem (missing, unparsable)
};

struct CorpusReport {
  std::vector<CorpusRecord> records;
  TheoremRegistry registry;
  double seconds = 0.0;

  bool all_accepted() const;
  std::size_t accepted_count() const;
  const CorpusRecord* find(const std::string& name) const;
};

/// Reads every corpus script from `dir`, checks them in dependency order and
/// registers the accepted ones.
CorpusReport verify_corpus(const std::string& dir);

/// Writes the generated script of every corpus theorem to `dir`.
std::vector<std::string> emit_corpus(const std::string& dir);

/// Directory of the shipped proof files, fixed at build time.
std::string default_corpus_dir();

}  // namespace dacosta

#endif  // DACOSTA_CORPUS_HPP
