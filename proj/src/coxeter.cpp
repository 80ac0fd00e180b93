#include "weyl/coxeter.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "json.hpp"

namespace weyl {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::Malformed: return "MALFORMED";
    case ErrorCode::InvalidLabel: return "INVALID_LABEL";
    case ErrorCode::DuplicateGenerator: return "DUPLICATE_GENERATOR";
    case ErrorCode::UnknownGenerator: return "UNKNOWN_GENERATOR";
    case ErrorCode::LimitExceeded: return "LIMIT_EXCEEDED";
    case ErrorCode::NotIrreducible: return "NOT_IRREDUCIBLE";
    case ErrorCode::EmptySystem: return "EMPTY";
    case ErrorCode::NotSpherical: return "NOT_SPHERICAL";
    case ErrorCode::NotChordal: return "NOT_CHORDAL";
    case ErrorCode::CliquePredicateFailed: return "CLIQUE_PREDICATE_FAILED";
    case ErrorCode::InvalidThickness: return "INVALID_THICKNESS";
    case ErrorCode::WrongRank: return "WRONG_RANK";
    case ErrorCode::Invalid: return "INVALID";
    case ErrorCode::BadRadii: return "BAD_RADII";
    case ErrorCode::Internal: return "INTERNAL";
  }
  return "UNKNOWN";
}

int popcount(GenSet s) { return std::popcount(s); }

GenSet full_set(int n) {
  return n >= 32 ? ~GenSet{0} : ((GenSet{1} << n) - 1);
}

bool subset_lex_less(GenSet a, GenSet b) {
  while (a != 0 || b != 0) {
    if (a == 0) return true;
    if (b == 0) return false;
    int ia = std::countr_zero(a);
    int ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

bool subset_size_lex_less(GenSet a, GenSet b) {
  int pa = popcount(a), pb = popcount(b);
  if (pa != pb) return pa < pb;
  return subset_lex_less(a, b);
}

CoxeterSystem CoxeterSystem::from_matrix(std::vector<std::string> names,
                                         std::vector<std::vector<int>> labels) {
  const int n = static_cast<int>(names.size());
  if (n > 31)
    throw Error(ErrorCode::LimitExceeded, "at most 31 generators supported");
  for (int i = 0; i < n; ++i) {
    if (names[i].empty())
      throw Error(ErrorCode::Malformed, "empty generator name");
    for (int j = i + 1; j < n; ++j)
      if (names[i] == names[j])
        throw Error(ErrorCode::DuplicateGenerator, names[i]);
  }
  if (static_cast<int>(labels.size()) != n)
    throw Error(ErrorCode::Malformed, "label matrix size mismatch");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(labels[i].size()) != n)
      throw Error(ErrorCode::Malformed, "label matrix size mismatch");
    if (labels[i][i] != 1)
      throw Error(ErrorCode::InvalidLabel,
                  "diagonal must be 1 at " + names[i]);
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      int m = labels[i][j];
      if (m != labels[j][i])
        throw Error(ErrorCode::Malformed, "label matrix not symmetric");
      if (m != kInfLabel && m < 2)
        throw Error(ErrorCode::InvalidLabel,
                    "off-diagonal label must be >= 2 or inf at " + names[i] +
                        "," + names[j]);
    }
  }
  CoxeterSystem sys;
  sys.names_ = std::move(names);
  sys.labels_ = std::move(labels);
  return sys;
}

namespace {

int parse_label_value(const nlohmann::json& v) {
  if (v.is_string()) {
    if (v.get<std::string>() == "inf") return kInfLabel;
    throw Error(ErrorCode::Malformed, "label must be an integer or \"inf\"");
  }
  if (!v.is_number_integer())
    throw Error(ErrorCode::Malformed, "label must be an integer or \"inf\"");
  long long m = v.get<long long>();
  if (m < 1 || m > std::numeric_limits<int>::max() - 1)
    throw Error(ErrorCode::InvalidLabel, "label out of range");
  return static_cast<int>(m);
}

}  // namespace

CoxeterSystem CoxeterSystem::parse(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Malformed, e.what());
  }
  if (!doc.is_object() || !doc.contains("generators") ||
      !doc["generators"].is_array())
    throw Error(ErrorCode::Malformed, "expected object with \"generators\"");
  std::vector<std::string> names;
  for (const auto& g : doc["generators"]) {
    if (!g.is_string())
      throw Error(ErrorCode::Malformed, "generator names must be strings");
    names.push_back(g.get<std::string>());
  }
  if (names.empty())
    throw Error(ErrorCode::Malformed, "generators must be non-empty");
  const int n = static_cast<int>(names.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (names[i] == names[j])
        throw Error(ErrorCode::DuplicateGenerator, names[i]);

  auto find = [&](const std::string& s) {
    for (int i = 0; i < n; ++i)
      if (names[i] == s) return i;
    throw Error(ErrorCode::UnknownGenerator, s);
  };

  std::vector<std::vector<int>> labels(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) labels[i][i] = 1;
  std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));

  if (doc.contains("labels")) {
    if (!doc["labels"].is_object())
      throw Error(ErrorCode::Malformed, "\"labels\" must be an object");
    for (const auto& [key, value] : doc["labels"].items()) {
      auto comma = key.find(',');
      if (comma == std::string::npos)
        throw Error(ErrorCode::Malformed, "pair key must be \"x,y\": " + key);
      int i = find(key.substr(0, comma));
      int j = find(key.substr(comma + 1));
      int m = parse_label_value(value);
      if (i == j) {
        if (m != 1)
          throw Error(ErrorCode::InvalidLabel, "diagonal must be 1 at " + key);
        continue;
      }
      if (m == 1)
        throw Error(ErrorCode::InvalidLabel,
                    "label 1 allowed only on the diagonal: " + key);
      if (seen[i][j])
        throw Error(ErrorCode::Malformed, "duplicate pair key: " + key);
      seen[i][j] = seen[j][i] = true;
      labels[i][j] = labels[j][i] = m;
    }
  }
  return from_matrix(std::move(names), std::move(labels));
}

std::string CoxeterSystem::serialize() const {
  nlohmann::ordered_json doc;
  doc["generators"] = names_;
  nlohmann::ordered_json labels = nlohmann::ordered_json::object();
  for (int i = 0; i < rank(); ++i)
    for (int j = i + 1; j < rank(); ++j) {
      int m = labels_[i][j];
      if (m == 2) continue;
      std::string key = names_[i] + "," + names_[j];
      if (m == kInfLabel)
        labels[key] = "inf";
      else
        labels[key] = m;
    }
  doc["labels"] = labels;
  return doc.dump();
}

int CoxeterSystem::index_of(const std::string& name) const {
  for (int i = 0; i < rank(); ++i)
    if (names_[i] == name) return i;
  throw Error(ErrorCode::UnknownGenerator, name);
}

CoxeterSystem CoxeterSystem::restrict_to(GenSet J) const {
  if ((J & ~all()) != 0)
    throw Error(ErrorCode::UnknownGenerator, "subset not contained in S");
  std::vector<int> idx;
  for (int i = 0; i < rank(); ++i)
    if (J & (GenSet{1} << i)) idx.push_back(i);
  std::vector<std::string> names;
  std::vector<std::vector<int>> labels(idx.size(),
                                       std::vector<int>(idx.size()));
  for (size_t a = 0; a < idx.size(); ++a) {
    names.push_back(names_[idx[a]]);
    for (size_t b = 0; b < idx.size(); ++b)
      labels[a][b] = labels_[idx[a]][idx[b]];
  }
  CoxeterSystem sys;
  sys.names_ = std::move(names);
  sys.labels_ = std::move(labels);
  return sys;
}

DiagramGraph CoxeterSystem::diagram(DiagramKind kind) const {
  DiagramGraph g{kind, rank(), {}};
  for (int i = 0; i < rank(); ++i)
    for (int j = i + 1; j < rank(); ++j) {
      int m = labels_[i][j];
      bool keep = (kind == DiagramKind::Coxeter) ? (m != 2) : (m != kInfLabel);
      if (keep) g.edges.push_back({i, j, m});
    }
  return g;
}

std::vector<GenSet> CoxeterSystem::irreducible_components() const {
  std::vector<GenSet> comps;
  std::vector<bool> used(rank(), false);
  for (int s = 0; s < rank(); ++s) {
    if (used[s]) continue;
    GenSet comp = 0;
    std::vector<int> stack{s};
    used[s] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp |= GenSet{1} << v;
      for (int u = 0; u < rank(); ++u)
        if (!used[u] && labels_[v][u] != 2 && u != v) {
          used[u] = true;
          stack.push_back(u);
        }
    }
    comps.push_back(comp);
  }
  return comps;
}

bool CoxeterSystem::perpendicular(GenSet a, GenSet b) const {
  for (int i = 0; i < rank(); ++i) {
    if (!(a & (GenSet{1} << i))) continue;
    for (int j = 0; j < rank(); ++j) {
      if (!(b & (GenSet{1} << j))) continue;
      if (i == j || labels_[i][j] != 2) return false;
    }
  }
  return true;
}

bool CoxeterSystem::same_matrix(const CoxeterSystem& other) const {
  return names_ == other.names_ && labels_ == other.labels_;
}

std::string CoxeterSystem::subset_to_string(GenSet J) const {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (int i = 0; i < rank(); ++i)
    if (J & (GenSet{1} << i)) {
      if (!first) out << ",";
      out << names_[i];
      first = false;
    }
  out << "}";
  return out.str();
}

}  // namespace weyl
