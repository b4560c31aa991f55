#include "genderflow/morph.hpp"

#include <fstream>

#include "genderflow/error.hpp"
#include "genderflow/util.hpp"

namespace genderflow {

std::string_view morph_gender_name(MorphGender g) {
  switch (g) {
    case MorphGender::Fem: return "f";
    case MorphGender::Msc: return "m";
    case MorphGender::Neut: return "n";
    case MorphGender::NoGender: return "-";
  }
  return "-";
}

MorphGender morph_gender_from_name(std::string_view name) {
  std::string n = util::ascii_lower(name);
  if (n == "f" || n == "fem") return MorphGender::Fem;
  if (n == "m" || n == "msc") return MorphGender::Msc;
  if (n == "n" || n == "neut") return MorphGender::Neut;
  if (n == "-" || n == "none") return MorphGender::NoGender;
  throw DataError("unknown morph gender tag: '" + std::string(name) + "'");
}

void MorphAnalyzer::add_dict_entry(const std::string& surface, MorphGender gender, bool pronoun) {
  if (surface.empty()) throw DataError("analyzer dict: empty surface form");
  if (gender == MorphGender::Neut && !has_neuter_) {
    throw DataError("analyzer dict entry '" + surface + "' is tagged neuter but " + lang_ +
                    " does not declare a neuter gender");
  }
  const std::string key = util::ascii_lower(surface);
  auto [it, inserted] = dict_.emplace(key, gender);
  if (!inserted && it->second != gender) it->second = MorphGender::NoGender;
  if (pronoun) pronouns_.insert(key);
}

MorphAnalyzer MorphAnalyzer::make(std::string lang, bool has_neuter,
                                  const std::vector<DictEntry>& dict,
                                  std::vector<std::pair<std::string, MorphGender>> suffix_rules) {
  MorphAnalyzer a;
  a.lang_ = std::move(lang);
  a.has_neuter_ = has_neuter;
  for (const auto& e : dict) a.add_dict_entry(e.surface, e.gender, e.pronoun);
  for (auto& [suffix, gender] : suffix_rules) {
    if (gender == MorphGender::Neut && !has_neuter) {
      throw DataError("suffix rule '" + suffix + "' is tagged neuter but the language does not "
                      "declare a neuter gender");
    }
    a.suffix_rules_.emplace_back(util::ascii_lower(suffix), gender);
  }
  return a;
}

MorphAnalyzer MorphAnalyzer::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open analyzer spec: " + path);

  MorphAnalyzer a;
  std::vector<std::pair<std::string, MorphGender>> suffixes;
  std::vector<DictEntry> dict;
  enum class Section { None, Meta, Dict, Suffix } section = Section::None;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    std::string_view body = util::trim(line);
    if (body.empty() || body[0] == '#') continue;
    if (body == "[meta]") {
      section = Section::Meta;
      continue;
    }
    if (body == "[dict]") {
      section = Section::Dict;
      continue;
    }
    if (body == "[suffix]") {
      section = Section::Suffix;
      continue;
    }
    switch (section) {
      case Section::None:
        throw DataError(path + " row " + std::to_string(row) + ": content before any section");
      case Section::Meta: {
        const auto eq = body.find('=');
        if (eq == std::string_view::npos) {
          throw DataError(path + " row " + std::to_string(row) + ": expected key=value");
        }
        const std::string key(util::trim(body.substr(0, eq)));
        const std::string value(util::trim(body.substr(eq + 1)));
        if (key == "lang") {
          a.lang_ = value;
        } else if (key == "has_neuter") {
          a.has_neuter_ = (value == "true" || value == "1" || value == "yes");
        } else {
          throw DataError(path + " row " + std::to_string(row) + ": unknown meta key '" + key +
                          "'");
        }
        break;
      }
      case Section::Dict: {
        const auto cols = util::split(body, '\t');
        if (cols.size() != 2 && cols.size() != 3) {
          throw DataError(path + " row " + std::to_string(row) +
                          ": dict rows need 2 or 3 columns");
        }
        DictEntry e;
        e.surface = std::string(util::trim(cols[0]));
        e.gender = morph_gender_from_name(util::trim(cols[1]));
        if (cols.size() == 3) {
          const std::string marker(util::trim(cols[2]));
          if (marker != "pron") {
            throw DataError(path + " row " + std::to_string(row) + ": unknown marker '" + marker +
                            "' (expected 'pron')");
          }
          e.pronoun = true;
        }
        dict.push_back(std::move(e));
        break;
      }
      case Section::Suffix: {
        const auto cols = util::split(body, '\t');
        if (cols.size() != 2) {
          throw DataError(path + " row " + std::to_string(row) + ": suffix rows need 2 columns");
        }
        suffixes.emplace_back(std::string(util::trim(cols[0])),
                              morph_gender_from_name(util::trim(cols[1])));
        break;
      }
    }
  }
  return make(a.lang_.empty() ? "und" : a.lang_, a.has_neuter_, dict, std::move(suffixes));
}

MorphTag MorphAnalyzer::analyze(std::string_view token) const {
  const std::string t = util::ascii_lower(token);
  if (const auto it = dict_.find(t); it != dict_.end()) {
    return MorphTag{it->second, TagSource::Dictionary};
  }
  for (const auto& [suffix, gender] : suffix_rules_) {
    if (util::ends_with(t, suffix)) return MorphTag{gender, TagSource::SuffixRule};
  }
  return MorphTag{};
}

std::vector<MorphTag> MorphAnalyzer::analyze(const Sentence& s) const {
  std::vector<MorphTag> tags;
  tags.reserve(s.tokens.size());
  for (const auto& token : s.tokens) tags.push_back(analyze(token));
  return tags;
}

std::vector<MorphGender> MorphAnalyzer::sentence_genders(const Sentence& s) const {
  std::vector<MorphGender> genders;
  for (const auto& token : s.tokens) {
    const MorphTag tag = analyze(token);
    if (tag.gender != MorphGender::NoGender) genders.push_back(tag.gender);
  }
  return genders;
}

bool MorphAnalyzer::is_pronoun(std::string_view token) const {
  return pronouns_.count(util::ascii_lower(token)) > 0;
}

} // namespace genderflow
