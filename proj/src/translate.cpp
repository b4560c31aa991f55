#include "genderflow/translate.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <csignal>
#include <fstream>
#include <sstream>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "genderflow/corpus.hpp"
#include "genderflow/error.hpp"
#include "genderflow/util.hpp"

namespace genderflow {

std::string_view translator_kind_name(TranslatorKind k) {
  switch (k) {
    case TranslatorKind::HttpService: return "http";
    case TranslatorKind::Subprocess: return "subprocess";
    case TranslatorKind::DictMock: return "dict_mock";
  }
  return "dict_mock";
}

TranslatorKind translator_kind_from_name(std::string_view name) {
  std::string n = util::ascii_lower(name);
  if (n == "http" || n == "http_service" || n == "httpservice") return TranslatorKind::HttpService;
  if (n == "subprocess" || n == "command") return TranslatorKind::Subprocess;
  if (n == "dict_mock" || n == "dictmock" || n == "mock") return TranslatorKind::DictMock;
  throw ConfigError("unknown translator kind: '" + std::string(name) + "'");
}

std::string TranslatorHandle::identity() const {
  std::string id(translator_kind_name(kind));
  switch (kind) {
    case TranslatorKind::HttpService: return id + ":" + endpoint;
    case TranslatorKind::Subprocess: return id + ":" + command;
    case TranslatorKind::DictMock: return id + ":" + table_path;
  }
  return id;
}

std::unordered_map<std::string, std::string> load_mock_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open mock table: " + path);
  std::unordered_map<std::string, std::string> table;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    std::string_view body = util::trim(line);
    if (body.empty() || body[0] == '#') continue;
    const auto cols = util::split(body, '\t');
    if (cols.size() < 2) {
      throw DataError(path + " row " + std::to_string(row) + ": expected at least 2 columns");
    }
    table[cols[0]] = cols[1];
  }
  return table;
}

Translator::Translator(TranslatorHandle handle) : handle_(std::move(handle)) {
  if (handle_.batch_size < 1) throw ConfigError("translator batch_size must be >= 1");
  if (handle_.max_inflight < 1) throw ConfigError("translator max_inflight must be >= 1");
  if (handle_.kind == TranslatorKind::DictMock) {
    if (handle_.table_path.empty()) throw ConfigError("DictMock translator needs a table path");
    std::ifstream in(handle_.table_path);
    if (!in) throw DataError("cannot open mock table: " + handle_.table_path);
    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
      ++row;
      std::string_view body = util::trim(line);
      if (body.empty() || body[0] == '#') continue;
      const auto cols = util::split(body, '\t');
      if (cols.size() < 2) {
        throw DataError(handle_.table_path + " row " + std::to_string(row) +
                        ": expected at least 2 columns");
      }
      table_[cols[0]] = cols[1];
      if (cols.size() >= 3 && !cols[2].empty()) opposite_[cols[1]] = cols[2];
    }
  }
}

std::vector<std::string> Translator::mock_batch(const std::vector<std::string>& lines,
                                                std::size_t first_line_index) const {
  std::vector<std::string> out;
  out.reserve(lines.size());
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const std::size_t line_index = first_line_index + k;
    const auto tokens = tokenize(lines[k]);
    std::string translated;
    for (std::size_t t = 0; t < tokens.size(); ++t) {
      const auto it = table_.find(tokens[t]);
      std::string target = it != table_.end() ? it->second : tokens[t];
      if (handle_.error_rate > 0.0) {
        const auto opp = opposite_.find(target);
        if (opp != opposite_.end() &&
            util::hash_uniform(handle_.seed, line_index, t) < handle_.error_rate) {
          target = opp->second;
        }
      }
      if (!translated.empty()) translated += ' ';
      translated += target;
    }
    out.push_back(std::move(translated));
  }
  return out;
}

std::vector<std::string> Translator::http_batch(const std::vector<std::string>& lines,
                                                std::size_t batch_index,
                                                std::size_t* retries) const {
  nlohmann::json request = {{"src_lang", handle_.src_lang},
                            {"tgt_lang", handle_.tgt_lang},
                            {"lines", lines}};
  const std::string body = request.dump();

  std::string last_error;
  for (int attempt = 0; attempt <= handle_.max_retries; ++attempt) {
    if (attempt > 0) {
      if (retries) ++*retries;
      const int delay_ms = std::min(50 << (attempt - 1), 1000);
      std::this_thread::sleep_for(std::chrono::milliseconds(delay_ms));
    }
    httplib::Client client(handle_.endpoint);
    client.set_connection_timeout(0, handle_.timeout_ms * 1000LL);
    client.set_read_timeout(handle_.timeout_ms / 1000, (handle_.timeout_ms % 1000) * 1000);
    auto res = client.Post("/translate", body, "application/json");
    if (!res) {
      last_error = "connection failed: " + httplib::to_string(res.error());
      continue;
    }
    if (res->status != 200) {
      last_error = "HTTP status " + std::to_string(res->status);
      continue;
    }
    nlohmann::json response;
    try {
      response = nlohmann::json::parse(res->body);
    } catch (const nlohmann::json::exception& e) {
      throw ServiceError("batch " + std::to_string(batch_index) +
                         ": invalid JSON response: " + e.what());
    }
    if (!response.contains("translations") || !response["translations"].is_array()) {
      throw ServiceError("batch " + std::to_string(batch_index) +
                         ": response has no 'translations' array");
    }
    auto translations = response["translations"].get<std::vector<std::string>>();
    if (translations.size() != lines.size()) {
      throw ServiceError("batch " + std::to_string(batch_index) + ": sent " +
                         std::to_string(lines.size()) + " lines, got " +
                         std::to_string(translations.size()) + " translations");
    }
    return translations;
  }
  throw ServiceError("batch " + std::to_string(batch_index) + ": translation service at " +
                     handle_.endpoint + " unreachable after " +
                     std::to_string(handle_.max_retries + 1) + " attempts (" + last_error + ")");
}

std::vector<std::string> Translator::subprocess_batch(const std::vector<std::string>& lines,
                                                      std::size_t batch_index) const {
  [[maybe_unused]] static const auto sigpipe_ignored = signal(SIGPIPE, SIG_IGN);
  int to_child[2], from_child[2];
  if (pipe(to_child) != 0 || pipe(from_child) != 0) {
    throw ServiceError("batch " + std::to_string(batch_index) + ": pipe() failed");
  }
  const pid_t pid = fork();
  if (pid < 0) throw ServiceError("batch " + std::to_string(batch_index) + ": fork() failed");
  if (pid == 0) {
    dup2(to_child[0], STDIN_FILENO);
    dup2(from_child[1], STDOUT_FILENO);
    close(to_child[0]);
    close(to_child[1]);
    close(from_child[0]);
    close(from_child[1]);
    execl("/bin/sh", "sh", "-c", handle_.command.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  close(to_child[0]);
  close(from_child[1]);

  // Writer runs on its own thread so a child that interleaves reading and
  // writing cannot deadlock us on full pipe buffers.
  std::thread writer([&lines, fd = to_child[1]] {
    std::string input;
    for (const auto& line : lines) {
      input += line;
      input += '\n';
    }
    std::size_t off = 0;
    while (off < input.size()) {
      const ssize_t n = write(fd, input.data() + off, input.size() - off);
      if (n <= 0) break;
      off += static_cast<std::size_t>(n);
    }
    close(fd);
  });

  std::string output;
  char buf[4096];
  ssize_t n;
  while ((n = read(from_child[0], buf, sizeof buf)) > 0) output.append(buf, buf + n);
  close(from_child[0]);
  writer.join();
  int status = 0;
  waitpid(pid, &status, 0);
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
    throw ServiceError("batch " + std::to_string(batch_index) + ": command '" + handle_.command +
                       "' exited with status " + std::to_string(WEXITSTATUS(status)));
  }

  std::vector<std::string> out;
  std::istringstream stream(output);
  std::string line;
  while (std::getline(stream, line)) out.push_back(line);
  if (out.size() != lines.size()) {
    throw ServiceError("batch " + std::to_string(batch_index) + ": sent " +
                       std::to_string(lines.size()) + " lines, command returned " +
                       std::to_string(out.size()));
  }
  return out;
}

std::vector<std::string> Translator::run_batch(const std::vector<std::string>& lines,
                                               std::size_t first_line_index,
                                               std::size_t batch_index,
                                               std::size_t* retries) const {
  switch (handle_.kind) {
    case TranslatorKind::DictMock: return mock_batch(lines, first_line_index);
    case TranslatorKind::HttpService: return http_batch(lines, batch_index, retries);
    case TranslatorKind::Subprocess: return subprocess_batch(lines, batch_index);
  }
  throw ConfigError("unknown translator kind");
}

std::vector<std::string> Translator::translate_lines(const std::vector<std::string>& lines,
                                                     TranslateManifest* manifest) const {
  const std::size_t batch_size = static_cast<std::size_t>(handle_.batch_size);
  const std::size_t n_batches = (lines.size() + batch_size - 1) / batch_size;
  std::vector<std::vector<std::string>> results(n_batches);

  std::atomic<std::size_t> retries{0};
  const std::size_t inflight = std::min(static_cast<std::size_t>(handle_.max_inflight),
                                        std::max<std::size_t>(n_batches, 1));

  auto worker_body = [&](std::size_t b) {
    const std::size_t begin = b * batch_size;
    const std::size_t end = std::min(lines.size(), begin + batch_size);
    std::vector<std::string> batch(lines.begin() + begin, lines.begin() + end);
    std::size_t local_retries = 0;
    results[b] = run_batch(batch, begin, b, &local_retries);
    retries += local_retries;
  };

  if (inflight <= 1) {
    for (std::size_t b = 0; b < n_batches; ++b) worker_body(b);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(inflight);
    for (std::size_t w = 0; w < inflight; ++w) {
      threads.emplace_back([&, w] {
        try {
          for (std::size_t b = next++; b < n_batches; b = next++) worker_body(b);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  std::vector<std::string> out;
  out.reserve(lines.size());
  for (auto& r : results) {
    for (auto& line : r) out.push_back(std::move(line));
  }
  if (manifest) {
    manifest->kind = std::string(translator_kind_name(handle_.kind));
    manifest->identity = handle_.identity();
    manifest->lines = out.size();
    manifest->batches = n_batches;
    manifest->retries = retries.load();
  }
  return out;
}

MonoCorpus Translator::translate_corpus(const MonoCorpus& corpus,
                                        TranslateManifest* manifest) const {
  std::vector<std::string> lines;
  lines.reserve(corpus.size());
  for (const auto& s : corpus.sentences) lines.push_back(s.raw);
  const auto translated = translate_lines(lines, manifest);
  MonoCorpus out;
  out.lang = handle_.tgt_lang;
  for (std::size_t i = 0; i < translated.size(); ++i) {
    out.sentences.push_back(make_sentence(translated[i], corpus.sentences[i].line_no));
  }
  return out;
}

} // namespace genderflow
