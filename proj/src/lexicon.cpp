#include "genderflow/lexicon.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "genderflow/error.hpp"
#include "genderflow/util.hpp"

namespace genderflow {

namespace {

const char* const kDefaultFemPronouns[] = {"she", "her", "hers", "herself"};
const char* const kDefaultMscPronouns[] = {"he", "him", "his", "himself"};

// Curated subset of the usual feminine/masculine swap pairs. Larger lists
// (e.g. the 104-pair WinoBias list) can be supplied as a pair file.
const std::pair<const char*, const char*> kDefaultWordPairs[] = {
    {"sister", "brother"},       {"sisters", "brothers"},
    {"girl", "boy"},             {"girls", "boys"},
    {"woman", "man"},            {"women", "men"},
    {"mother", "father"},        {"mothers", "fathers"},
    {"daughter", "son"},         {"daughters", "sons"},
    {"aunt", "uncle"},           {"aunts", "uncles"},
    {"niece", "nephew"},         {"nieces", "nephews"},
    {"grandmother", "grandfather"}, {"grandma", "grandpa"},
    {"granddaughter", "grandson"}, {"wife", "husband"},
    {"wives", "husbands"},       {"bride", "groom"},
    {"queen", "king"},           {"queens", "kings"},
    {"princess", "prince"},      {"duchess", "duke"},
    {"empress", "emperor"},      {"countess", "count"},
    {"actress", "actor"},        {"actresses", "actors"},
    {"waitress", "waiter"},      {"heroine", "hero"},
    {"hostess", "host"},         {"goddess", "god"},
    {"girlfriend", "boyfriend"}, {"girlfriends", "boyfriends"},
    {"schoolgirl", "schoolboy"}, {"lady", "gentleman"},
    {"ladies", "gentlemen"},     {"gal", "guy"},
    {"gals", "guys"},            {"mom", "dad"},
    {"mommy", "daddy"},          {"stepmother", "stepfather"},
    {"stepdaughter", "stepson"}, {"widow", "widower"},
    {"nun", "monk"},             {"witch", "wizard"},
    {"female", "male"},          {"females", "males"},
    {"feminine", "masculine"},   {"businesswoman", "businessman"},
    {"chairwoman", "chairman"},  {"spokeswoman", "spokesman"},
    {"congresswoman", "congressman"}, {"policewoman", "policeman"},
};

bool single_lower_token(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c >= 'A' && c <= 'Z') return false;
    if (c == ' ' || c == '\t') return false;
  }
  return true;
}

} // namespace

std::string_view token_class_name(TokenClass c) {
  switch (c) {
    case TokenClass::FemPronoun: return "fem_pronoun";
    case TokenClass::MscPronoun: return "msc_pronoun";
    case TokenClass::FemWord: return "fem_word";
    case TokenClass::MscWord: return "msc_word";
    case TokenClass::Neutral: return "neutral";
  }
  return "neutral";
}

void GenderLexicon::add_pair(const std::string& fem, const std::string& msc, std::size_t row) {
  if (!single_lower_token(fem) || !single_lower_token(msc)) {
    throw DataError("pair list row " + std::to_string(row) +
                    ": entries must be nonempty lowercase single tokens");
  }
  if (fem == msc || msc_words_.count(fem) || fem_words_.count(msc)) {
    throw DataError("pair list row " + std::to_string(row) + ": token appears on both sides ('" +
                    fem + "' / '" + msc + "')");
  }
  const auto pair = std::make_pair(fem, msc);
  fem_words_.insert(fem);
  msc_words_.insert(msc);
  if (std::find(word_pairs_.begin(), word_pairs_.end(), pair) == word_pairs_.end()) {
    word_pairs_.push_back(pair);
  }
}

void GenderLexicon::validate() const {
  for (const auto& p : fem_pronouns_) {
    if (msc_pronouns_.count(p)) throw DataError("pronoun '" + p + "' listed in both sections");
    if (!single_lower_token(p)) throw DataError("pronoun '" + p + "' is not a lowercase token");
  }
  for (const auto& p : msc_pronouns_) {
    if (!single_lower_token(p)) throw DataError("pronoun '" + p + "' is not a lowercase token");
  }
}

GenderLexicon GenderLexicon::defaults() {
  GenderLexicon lex;
  for (const char* p : kDefaultFemPronouns) lex.fem_pronouns_.insert(p);
  for (const char* p : kDefaultMscPronouns) lex.msc_pronouns_.insert(p);
  std::size_t row = 0;
  for (const auto& [f, m] : kDefaultWordPairs) lex.add_pair(f, m, ++row);
  lex.validate();
  return lex;
}

GenderLexicon GenderLexicon::load(const std::string& pronoun_path, const std::string& pairs_path) {
  GenderLexicon lex;

  if (pronoun_path.empty()) {
    for (const char* p : kDefaultFemPronouns) lex.fem_pronouns_.insert(p);
    for (const char* p : kDefaultMscPronouns) lex.msc_pronouns_.insert(p);
  } else {
    std::ifstream in(pronoun_path);
    if (!in) throw DataError("cannot open pronoun list: " + pronoun_path);
    std::unordered_set<std::string>* section = nullptr;
    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
      ++row;
      std::string token(util::trim(line));
      if (token.empty() || token[0] == '#') continue;
      if (token == "[fem]") {
        section = &lex.fem_pronouns_;
      } else if (token == "[msc]") {
        section = &lex.msc_pronouns_;
      } else if (!section) {
        throw DataError(pronoun_path + " row " + std::to_string(row) +
                        ": token before any [fem]/[msc] section header");
      } else {
        section->insert(util::ascii_lower(token));
      }
    }
    if (lex.fem_pronouns_.empty() || lex.msc_pronouns_.empty()) {
      throw DataError(pronoun_path + ": both [fem] and [msc] sections must be nonempty");
    }
  }

  if (pairs_path.empty()) {
    std::size_t row = 0;
    for (const auto& [f, m] : kDefaultWordPairs) lex.add_pair(f, m, ++row);
  } else {
    std::ifstream in(pairs_path);
    if (!in) throw DataError("cannot open pair list: " + pairs_path);
    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
      ++row;
      std::string_view body = util::trim(line);
      if (body.empty() || body[0] == '#') continue;
      const auto cols = util::split(body, '\t');
      if (cols.size() != 2) {
        throw DataError(pairs_path + " row " + std::to_string(row) + ": expected 2 columns, got " +
                        std::to_string(cols.size()));
      }
      lex.add_pair(util::ascii_lower(util::trim(cols[0])), util::ascii_lower(util::trim(cols[1])),
                   row);
    }
  }

  lex.validate();
  return lex;
}

GenderLexicon GenderLexicon::load_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  const fs::path pronouns = fs::path(dir) / "pronouns.txt";
  const fs::path pairs = fs::path(dir) / "word_pairs.tsv";
  return load(fs::exists(pronouns) ? pronouns.string() : std::string(),
              fs::exists(pairs) ? pairs.string() : std::string());
}

TokenClass GenderLexicon::classify(std::string_view token) const {
  const std::string t = util::ascii_lower(token);
  if (fem_pronouns_.count(t)) return TokenClass::FemPronoun;
  if (msc_pronouns_.count(t)) return TokenClass::MscPronoun;
  if (fem_words_.count(t)) return TokenClass::FemWord;
  if (msc_words_.count(t)) return TokenClass::MscWord;
  return TokenClass::Neutral;
}

} // namespace genderflow
