#include "garside/io.hpp"

#include <charconv>
#include <sstream>

#include "garside/error.hpp"

namespace garside {

namespace {

int parse_int(std::string_view token, std::string_view whole) {
  int value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') {
    ++first;
  }
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError("malformed token '" + std::string(whole) + "'");
  }
  return value;
}

// Splits into tokens, dropping comments and treating '/' as a line break.
std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  bool comment = false;
  auto flush = [&] {
    if (!current.empty()) {
      tokens.push_back(current);
      current.clear();
    }
  };
  for (char ch : text) {
    if (ch == '\n' || ch == '\r' || ch == '/') {
      flush();
      comment = false;
      continue;
    }
    if (comment) {
      continue;
    }
    if (ch == '#') {
      flush();
      comment = true;
    } else if (ch == ' ' || ch == '\t' || ch == ',') {
      flush();
    } else {
      current.push_back(ch);
    }
  }
  flush();
  return tokens;
}

void append_token(Word& word, std::string_view token, PresentationKind kind, int index) {
  if (token.starts_with("d^") || token.starts_with("D^")) {
    const int k = parse_int(token.substr(2), token);
    for (int i = 0; i < (k < 0 ? -k : k); ++i) {
      word.push_back(Letter::delta_letter(k < 0));
    }
    return;
  }
  if (token == "d" || token == "D") {
    word.push_back(Letter::delta_letter());
    return;
  }
  bool inverse = false;
  std::string_view body = token;
  if (body.starts_with('-')) {
    inverse = true;
    body.remove_prefix(1);
  }
  if (kind == PresentationKind::artin) {
    const int i = parse_int(body, token);
    if (i < 1 || i >= index) {
      throw ParseError("generator '" + std::string(token) + "' out of range for artin " +
                       std::to_string(index));
    }
    word.push_back(Letter::generator(i - 1, inverse));
    return;
  }
  const auto dot = body.find('.');
  if (dot == std::string_view::npos) {
    throw ParseError("band generator '" + std::string(token) + "' must have the form t.s");
  }
  const int t = parse_int(body.substr(0, dot), token);
  const int s = parse_int(body.substr(dot + 1), token);
  if (!(index >= t && t > s && s >= 1)) {
    throw ParseError("band generator '" + std::string(token) + "' out of range for bkl " +
                     std::to_string(index));
  }
  word.push_back(Letter::generator((t - 1) * (t - 2) / 2 + (s - 1), inverse));
}

}  // namespace

std::string_view to_string(PresentationKind kind) {
  return kind == PresentationKind::artin ? "artin" : "bkl";
}

Word parse_tokens(std::string_view text, PresentationKind kind, int index) {
  Word word;
  for (const auto& token : tokenize(text)) {
    append_token(word, token, kind, index);
  }
  return word;
}

ParsedWord parse_word(std::string_view text) {
  const auto tokens = tokenize(text);
  if (tokens.size() < 2) {
    throw ParseError("expected a header 'artin <n>' or 'bkl <n>'");
  }
  ParsedWord parsed;
  if (tokens[0] == "artin") {
    parsed.kind = PresentationKind::artin;
  } else if (tokens[0] == "bkl") {
    parsed.kind = PresentationKind::bkl;
  } else {
    throw ParseError("unknown presentation '" + tokens[0] + "'");
  }
  parsed.index = parse_int(tokens[1], tokens[1]);
  if (parsed.index < 2 || parsed.index > 255) {
    throw ParseError("braid index must lie in [2, 255]");
  }
  for (std::size_t i = 2; i < tokens.size(); ++i) {
    append_token(parsed.word, tokens[i], parsed.kind, parsed.index);
  }
  return parsed;
}

std::string format_letter(PresentationKind kind, int /*index*/, const Letter& letter) {
  std::string out = letter.inverse ? "-" : "";
  if (letter.delta) {
    return letter.inverse ? "d^-1" : "d";
  }
  if (kind == PresentationKind::artin) {
    return out + std::to_string(letter.atom + 1);
  }
  int t = 2;
  while ((t - 1) * t / 2 <= letter.atom) {
    ++t;
  }
  const int s = letter.atom - (t - 1) * (t - 2) / 2 + 1;
  return out + std::to_string(t) + "." + std::to_string(s);
}

std::string format_tokens(PresentationKind kind, int index, const Word& word) {
  std::ostringstream out;
  bool first = true;
  auto emit = [&](const std::string& token) {
    if (!first) {
      out << ' ';
    }
    out << token;
    first = false;
  };
  for (std::size_t i = 0; i < word.size();) {
    if (word[i].delta) {
      int k = 0;
      while (i < word.size() && word[i].delta) {
        k += word[i].inverse ? -1 : 1;
        ++i;
      }
      if (k != 0) {
        emit("d^" + std::to_string(k));
      }
      continue;
    }
    emit(format_letter(kind, index, word[i]));
    ++i;
  }
  return out.str();
}

std::string format_word(PresentationKind kind, int index, const Word& word) {
  std::string body = format_tokens(kind, index, word);
  std::string out = std::string(to_string(kind)) + " " + std::to_string(index);
  if (!body.empty()) {
    out += " / " + body;
  }
  return out;
}

}  // namespace garside
