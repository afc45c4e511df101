#include "apoly/partition.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace apoly {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw StructuralError("Partition: negative part");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw StructuralError("Partition: parts must weakly decrease");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    std::size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(piece, &pos);
    } catch (const std::exception&) {
      throw StructuralError("Partition: cannot parse part '" + piece + "'");
    }
    if (pos != piece.size())
      throw StructuralError("Partition: cannot parse part '" + piece + "'");
    parts.push_back(value);
  }
  return Partition(std::move(parts));
}

int Partition::part(int i) const {
  if (i < 1) throw StructuralError("Partition::part: 1-based index");
  return i <= num_parts() ? parts_[i - 1] : 0;
}

int Partition::sum() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

std::vector<int> Partition::padded(int n) const {
  if (n < num_parts())
    throw StructuralError("Partition::padded: fewer slots than parts");
  std::vector<int> out(parts_);
  out.resize(n, 0);
  return out;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return Partition();
  std::vector<int> out(parts_[0], 0);
  for (int col = 1; col <= parts_[0]; ++col) {
    int count = 0;
    for (int p : parts_)
      if (p >= col) ++count;
    out[col - 1] = count;
  }
  return Partition(std::move(out));
}

int Partition::durfee() const {
  int l = 0;
  while (l < num_parts() && parts_[l] >= l + 1) ++l;
  return l;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

std::string Partition::to_string_padded(int n) const {
  const std::vector<int> p = padded(n);
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s;
}

bool Partition::operator<(const Partition& o) const {
  const std::size_t n = std::max(parts_.size(), o.parts_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int a = i < parts_.size() ? parts_[i] : 0;
    const int b = i < o.parts_.size() ? o.parts_[i] : 0;
    if (a != b) return a < b;
  }
  return false;
}

FrobeniusForm FrobeniusForm::parse(const std::string& text) {
  if (text.size() < 3 || text.front() != '(' || text.back() != ')')
    throw StructuralError("FrobeniusForm: expected '(a,...|b,...)'");
  const std::string inner = text.substr(1, text.size() - 2);
  const std::size_t bar = inner.find('|');
  if (bar == std::string::npos)
    throw StructuralError("FrobeniusForm: missing '|'");
  auto parse_list = [](const std::string& s) {
    std::vector<int> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string piece;
    while (std::getline(ss, piece, ',')) out.push_back(std::stoi(piece));
    return out;
  };
  FrobeniusForm f;
  f.arms = parse_list(inner.substr(0, bar));
  f.legs = parse_list(inner.substr(bar + 1));
  return f;
}

std::string FrobeniusForm::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < arms.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(arms[i]);
  }
  s += '|';
  for (std::size_t i = 0; i < legs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(legs[i]);
  }
  s += ')';
  return s;
}

FrobeniusForm to_frobenius(const Partition& p) {
  const Partition c = p.conjugate();
  const int l = p.durfee();
  FrobeniusForm f;
  for (int i = 1; i <= l; ++i) {
    f.arms.push_back(p.part(i) - i);
    f.legs.push_back(c.part(i) - i);
  }
  return f;
}

Partition from_frobenius(const FrobeniusForm& f) {
  if (f.arms.size() != f.legs.size())
    throw StructuralError("FrobeniusForm: arm/leg lists differ in length");
  const int l = f.size();
  for (int i = 0; i < l; ++i) {
    if (f.arms[i] < 0 || f.legs[i] < 0)
      throw StructuralError("FrobeniusForm: negative coordinate");
    if (i > 0 && (f.arms[i] >= f.arms[i - 1] || f.legs[i] >= f.legs[i - 1]))
      throw StructuralError("FrobeniusForm: coordinates must strictly decrease");
  }
  if (l == 0) return Partition();
  // rows 1..l from the arms; rows below the Durfee square from the legs
  const int rows = f.legs[0] + 1;
  std::vector<int> parts(rows, 0);
  for (int i = 0; i < l; ++i) parts[i] = f.arms[i] + i + 1;
  for (int r = l; r < rows; ++r) {
    int count = 0;
    for (int i = 0; i < l; ++i)
      if (f.legs[i] + i + 1 >= r + 1) ++count;
    parts[r] = count;
  }
  return Partition(std::move(parts));
}

bool is_modified_balanced(const Partition& p, int n) {
  if (p.num_parts() > n) return false;
  if (!p.empty() && p.part(1) > n - 1) return false;
  const FrobeniusForm f = to_frobenius(p);
  for (int i = 0; i < f.size(); ++i)
    if (f.arms[i] >= f.legs[i]) return false;
  return true;
}

namespace {

void gen_partitions(int slots, int maxpart, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (slots == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = 0; p <= maxpart; ++p) {
    cur.push_back(p);
    gen_partitions(slots - 1, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_modified_balanced(int n) {
  if (n < 0) throw StructuralError("enumerate_modified_balanced: n < 0");
  std::vector<Partition> all;
  std::vector<int> cur;
  gen_partitions(n, std::max(0, n - 1), cur, all);
  std::vector<Partition> out;
  for (auto& p : all)
    if (is_modified_balanced(p, n)) out.push_back(std::move(p));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

DyckPath::DyckPath(std::string steps) : steps_(std::move(steps)) {
  int balance = 0;
  for (char c : steps_) {
    if (c == 'N')
      ++balance;
    else if (c == 'E')
      --balance;
    else
      throw StructuralError("DyckPath: steps must be 'N' or 'E'");
    if (balance < 0)
      throw StructuralError("DyckPath: prefix with more E than N steps");
  }
  if (balance != 0) throw StructuralError("DyckPath: unbalanced step counts");
}

DyckPath DyckPath::parse(const std::string& text) {
  std::string raw;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ') {
      ++i;
      continue;
    }
    if (c != 'N' && c != 'E')
      throw StructuralError("DyckPath: unexpected character '" +
                            std::string(1, c) + "'");
    ++i;
    std::size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
      ++j;
    int count = 1;
    if (j > i) count = std::stoi(text.substr(i, j - i));
    raw.append(count, c);
    i = j;
  }
  return DyckPath(std::move(raw));
}

std::string DyckPath::run_length() const {
  std::string out;
  std::size_t i = 0;
  while (i < steps_.size()) {
    std::size_t j = i;
    while (j < steps_.size() && steps_[j] == steps_[i]) ++j;
    if (!out.empty()) out += ' ';
    out += steps_[i];
    out += std::to_string(j - i);
    i = j;
  }
  return out;
}

DyckPath dyck_encode(const Partition& p, int n) {
  if (!is_modified_balanced(p, n))
    throw DomainError("dyck_encode: partition is not modified balanced of size " +
                      std::to_string(n));
  const FrobeniusForm f = to_frobenius(p);
  const int l = f.size();
  std::string s;
  if (l == 0) {
    s.append(n, 'N');
    s.append(n, 'E');
    return DyckPath(std::move(s));
  }
  // N^{b_l} E^{a_l+1} N^{b_{l-1}-b_l} E^{a_{l-1}-a_l} ... N^{n-b_1} E^{n-a_1-1}
  s.append(f.legs[l - 1], 'N');
  s.append(f.arms[l - 1] + 1, 'E');
  for (int i = l - 1; i >= 1; --i) {
    s.append(f.legs[i - 1] - f.legs[i], 'N');
    s.append(f.arms[i - 1] - f.arms[i], 'E');
  }
  s.append(n - f.legs[0], 'N');
  s.append(n - f.arms[0] - 1, 'E');
  return DyckPath(std::move(s));
}

Partition dyck_decode(const DyckPath& path) {
  // split into maximal N-run/E-run pairs
  std::vector<std::pair<int, int>> runs;
  const std::string& s = path.steps();
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t j = i;
    while (j < s.size() && s[j] == 'N') ++j;
    std::size_t k = j;
    while (k < s.size() && s[k] == 'E') ++k;
    runs.emplace_back(static_cast<int>(j - i), static_cast<int>(k - j));
    i = k;
  }
  const int l = static_cast<int>(runs.size()) - 1;
  if (l < 0) return Partition();
  if (l == 0) return Partition();  // N^n E^n
  FrobeniusForm f;
  f.arms.resize(l);
  f.legs.resize(l);
  f.legs[l - 1] = runs[0].first;
  f.arms[l - 1] = runs[0].second - 1;
  for (int r = 1; r < l; ++r) {
    f.legs[l - 1 - r] = f.legs[l - r] + runs[r].first;
    f.arms[l - 1 - r] = f.arms[l - r] + runs[r].second;
  }
  return from_frobenius(f);
}

}  // namespace apoly
