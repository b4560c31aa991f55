#include "genderflow/corpus.hpp"

#include <fstream>

#include "genderflow/error.hpp"
#include "genderflow/util.hpp"

namespace genderflow {

std::string_view gender_name(Gender g) { return g == Gender::Fem ? "fem" : "msc"; }

Gender gender_from_name(std::string_view name) {
  std::string n = util::ascii_lower(name);
  if (n == "fem" || n == "f" || n == "feminine" || n == "female") return Gender::Fem;
  if (n == "msc" || n == "m" || n == "masculine" || n == "male") return Gender::Msc;
  throw DataError("unknown gender name: '" + std::string(name) + "'");
}

std::string_view origin_name(Origin o) {
  switch (o) {
    case Origin::Original: return "original";
    case Origin::PseudoFem: return "pseudo_fem";
    case Origin::PseudoMsc: return "pseudo_msc";
    case Origin::PseudoRandom: return "pseudo_random";
  }
  return "original";
}

Origin origin_from_name(std::string_view name) {
  if (name == "original") return Origin::Original;
  if (name == "pseudo_fem") return Origin::PseudoFem;
  if (name == "pseudo_msc") return Origin::PseudoMsc;
  if (name == "pseudo_random") return Origin::PseudoRandom;
  throw DataError("unknown origin tag: '" + std::string(name) + "'");
}

namespace {

constexpr std::string_view kSplitPunct = ".,;:!?\"()[]";

bool is_split_punct(char c) { return kSplitPunct.find(c) != std::string_view::npos; }

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
}

} // namespace

std::vector<std::string> tokenize(std::string_view raw) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  const std::size_t n = raw.size();
  while (i < n) {
    while (i < n && is_space(raw[i])) ++i;
    if (i >= n) break;
    std::size_t j = i;
    while (j < n && !is_space(raw[j])) ++j;
    std::string_view chunk = raw.substr(i, j - i);
    i = j;

    std::size_t b = 0, e = chunk.size();
    while (b < e && is_split_punct(chunk[b])) {
      tokens.emplace_back(1, chunk[b]);
      ++b;
    }
    std::size_t tail = e;
    while (tail > b && is_split_punct(chunk[tail - 1])) --tail;
    if (tail > b) tokens.emplace_back(chunk.substr(b, tail - b));
    for (std::size_t k = tail; k < e; ++k) tokens.emplace_back(1, chunk[k]);
  }
  return tokens;
}

Sentence make_sentence(std::string raw, std::size_t line_no) {
  Sentence s;
  s.tokens = tokenize(raw);
  s.raw = std::move(raw);
  s.line_no = line_no;
  return s;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

MonoCorpus load_mono(const std::string& path) {
  MonoCorpus corpus;
  corpus.path = path;
  const auto lines = read_lines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (util::trim(lines[i]).empty()) continue;
    corpus.sentences.push_back(make_sentence(lines[i], i + 1));
  }
  return corpus;
}

ParallelCorpus load_parallel(const std::string& src_path, const std::string& trg_path) {
  const auto src_lines = read_lines(src_path);
  const auto trg_lines = read_lines(trg_path);
  if (src_lines.size() != trg_lines.size()) {
    throw DataError("line count mismatch: " + src_path + " has " +
                    std::to_string(src_lines.size()) + " lines, " + trg_path + " has " +
                    std::to_string(trg_lines.size()));
  }
  ParallelCorpus corpus;
  corpus.src_path = src_path;
  corpus.trg_path = trg_path;
  for (std::size_t i = 0; i < src_lines.size(); ++i) {
    const bool src_blank = util::trim(src_lines[i]).empty();
    const bool trg_blank = util::trim(trg_lines[i]).empty();
    if (src_blank && trg_blank) continue;
    ParallelPair pair;
    pair.src = make_sentence(src_lines[i], i + 1);
    pair.trg = make_sentence(trg_lines[i], i + 1);
    corpus.pairs.push_back(std::move(pair));
  }
  return corpus;
}

ParallelCorpus preprocess_bitext(const ParallelCorpus& corpus, PreprocessReport& report,
                                 std::size_t max_len, double max_ratio) {
  ParallelCorpus out;
  out.src_lang = corpus.src_lang;
  out.trg_lang = corpus.trg_lang;
  out.src_path = corpus.src_path;
  out.trg_path = corpus.trg_path;
  report = PreprocessReport{};
  for (const auto& pair : corpus.pairs) {
    const std::size_t ns = pair.src.tokens.size();
    const std::size_t nt = pair.trg.tokens.size();
    if (ns == 0 || nt == 0) {
      ++report.removed_empty;
      continue;
    }
    if (ns > max_len || nt > max_len) {
      ++report.removed_length;
      continue;
    }
    const double ratio = ns > nt ? static_cast<double>(ns) / static_cast<double>(nt)
                                 : static_cast<double>(nt) / static_cast<double>(ns);
    if (ratio > max_ratio) {
      ++report.removed_ratio;
      continue;
    }
    out.pairs.push_back(pair);
    ++report.kept;
  }
  return out;
}

void write_lines(const std::string& path, const std::vector<std::string>& lines) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write file: " + path);
  for (const auto& line : lines) out << line << '\n';
}

void write_mono(const std::string& path, const MonoCorpus& corpus) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write file: " + path);
  for (const auto& s : corpus.sentences) out << s.raw << '\n';
}

void write_parallel(const std::string& prefix, const ParallelCorpus& corpus, bool with_origins) {
  std::ofstream src(prefix + ".src.txt");
  std::ofstream trg(prefix + ".trg.txt");
  if (!src || !trg) throw DataError("cannot write corpus files with prefix: " + prefix);
  for (const auto& pair : corpus.pairs) {
    src << pair.src.raw << '\n';
    trg << pair.trg.raw << '\n';
  }
  if (with_origins) {
    std::ofstream org(prefix + ".origins.txt");
    if (!org) throw DataError("cannot write origins file with prefix: " + prefix);
    for (const auto& pair : corpus.pairs) org << origin_name(pair.origin) << '\n';
  }
}

} // namespace genderflow
