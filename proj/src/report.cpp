#include "oliver/report.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace oliver {

std::string digest(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string table_digest(const CharacterTable& t) {
  std::string s = "e=" + std::to_string(t.field->conductor()) + ";";
  for (const auto& row : t.rows) {
    for (const auto& v : row) s += v.to_string() + ",";
    s += ";";
  }
  return digest(s);
}

std::string values_digest(const std::vector<Cyc>& values) {
  std::string s;
  for (const auto& v : values) s += v.to_string() + ",";
  return digest(s);
}

namespace {

nlohmann::ordered_json witness_json(const GpqWitness& w) {
  return {{"mid", w.mid_members},
          {"normal_subgroup", w.normal_members},
          {"coset_generator", w.coset_generator}};
}

nlohmann::ordered_json certificate_json(const TripleCertificate& c) {
  nlohmann::ordered_json j;
  j["strategy"] = c.strategy;
  j["h1_class"] = c.h1_class_label;
  j["h2_class"] = c.h2_class_label;
  j["p_class"] = c.p_class_label;
  j["h1"] = c.h1;
  j["h2"] = c.h2;
  j["p"] = c.p;
  if (c.strategy == 1) {
    j["p_prime"] = c.p_prime;
    j["h1_witness"] = witness_json(c.h1_witness);
    j["h2_witness"] = witness_json(c.h2_witness);
  } else {
    j["parity"] = c.parity;
  }
  j["dim_h1"] = c.dim_h1;
  j["dim_h2"] = c.dim_h2;
  j["dim_p"] = c.dim_p;
  return j;
}

}  // namespace

nlohmann::ordered_json report_to_json(const ExclusionReport& r) {
  nlohmann::ordered_json j;
  j["format"] = "exclusion-report";
  j["version"] = 1;
  j["group"] = r.group_spec;
  j["order"] = r.order;
  j["degree"] = r.degree;
  j["exponent"] = r.exponent;
  j["n"] = r.n;
  j["options"] = {
      {"morimoto", r.options.morimoto},
      {"strategy", r.options.strategy == StrategyFilter::both
                       ? "both"
                       : (r.options.strategy == StrategyFilter::only1 ? "1" : "2")},
      {"element_cap", r.options.element_cap},
  };
  j["oliver"] = r.oliver;
  j["num_subgroup_classes"] = r.num_subgroup_classes;
  j["morimoto_kernel"] = r.morimoto_kernel_members;
  nlohmann::ordered_json cands = nlohmann::ordered_json::array();
  for (const auto& o : r.outcomes) {
    nlohmann::ordered_json c;
    c["label"] = o.candidate.label;
    c["summands"] = nlohmann::ordered_json::array();
    for (int s : o.candidate.summands) c["summands"].push_back(s);
    c["values_digest"] = values_digest(o.candidate.values);
    c["outcome"] = to_string(o.kind);
    if (o.kind == OutcomeKind::morimoto_excluded)
      c["morimoto_fixed_dim"] = o.morimoto_fixed_dim;
    if (o.certificate) c["certificate"] = certificate_json(*o.certificate);
    cands.push_back(std::move(c));
  }
  j["candidates"] = std::move(cands);
  j["verdict"] = r.excluded ? "EXCLUDED" : "NOT_EXCLUDED";
  j["table_digest"] = r.table_digest;
  return j;
}

std::string report_to_string(const ExclusionReport& report) {
  return report_to_json(report).dump(2) + "\n";
}

std::string fixdim_csv(const FixedDimTable& table) {
  std::string out = "label";
  for (const auto& c : table.column_labels) out += "," + c;
  out += "\n";
  for (std::size_t r = 0; r < table.row_labels.size(); ++r) {
    out += table.row_labels[r];
    for (long long v : table.entries[r]) out += "," + std::to_string(v);
    out += "\n";
  }
  return out;
}

void write_chartab(std::ostream& out, const CharacterTable& t, const Group& G) {
  out << "conductor: " << t.field->conductor() << "\n";
  out << "classes: " << G.num_classes() << "\n";
  for (const auto& c : G.classes())
    out << "class: " << c.size << " " << G.elements()[c.representative].cycle_string()
        << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c)
      out << (c ? ", " : "") << row[c].to_string();
    out << "\n";
  }
}

std::string chartab_to_string(const CharacterTable& t, const Group& G) {
  std::ostringstream os;
  write_chartab(os, t, G);
  return os.str();
}

CharacterTable read_chartab(std::istream& in, const Group& G) {
  std::string line;
  long long conductor = -1;
  int num_classes = -1;
  std::vector<int> column_to_class;  // file column -> internal class index

  auto next_content_line = [&](std::string& out_line) -> bool {
    while (std::getline(in, out_line)) {
      auto hash = out_line.find('#');
      if (hash != std::string::npos) out_line.erase(hash);
      bool blank = true;
      for (char ch : out_line)
        if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
      if (!blank) return true;
    }
    return false;
  };

  if (!next_content_line(line) || line.rfind("conductor:", 0) != 0)
    throw std::invalid_argument("character table file: expected 'conductor:'");
  conductor = std::stoll(line.substr(10));
  if (conductor < 1 || G.exponent() % conductor != 0)
    throw std::invalid_argument("character table file: conductor must divide the exponent");

  if (!next_content_line(line) || line.rfind("classes:", 0) != 0)
    throw std::invalid_argument("character table file: expected 'classes:'");
  num_classes = std::stoi(line.substr(8));
  if (num_classes != G.num_classes())
    throw std::invalid_argument("character table file: class count mismatch");

  std::vector<char> class_seen(G.num_classes(), 0);
  for (int c = 0; c < num_classes; ++c) {
    if (!next_content_line(line) || line.rfind("class:", 0) != 0)
      throw std::invalid_argument("character table file: expected 'class:' line");
    std::istringstream ls(line.substr(6));
    long long size;
    if (!(ls >> size)) throw std::invalid_argument("character table file: bad class size");
    std::string cycles;
    std::getline(ls, cycles);
    Perm rep = Perm::parse(cycles, G.degree());
    int cls = G.class_of(G.index_of(rep));
    if (G.classes()[cls].size != size)
      throw std::invalid_argument("character table file: class size mismatch for " +
                                  rep.cycle_string());
    if (class_seen[cls])
      throw std::invalid_argument("character table file: duplicate class " +
                                  rep.cycle_string());
    class_seen[cls] = 1;
    column_to_class.push_back(cls);
  }

  const CyclotomicField* field = &CyclotomicField::of(G.exponent());
  const CyclotomicField& file_field = CyclotomicField::of(conductor);
  const long long scale = G.exponent() / conductor;

  CharacterTable t;
  t.field = field;
  while (next_content_line(line)) {
    std::vector<Cyc> row(G.num_classes(), Cyc::zero(field));
    std::istringstream ls(line);
    std::string cell;
    int col = 0;
    while (std::getline(ls, cell, ',')) {
      if (col >= num_classes)
        throw std::invalid_argument("character table file: too many values in a row");
      // reinterpret file-conductor roots inside the exponent field
      Cyc local = Cyc::parse(&file_field, cell);
      Cyc lifted = Cyc::zero(field);
      for (int k = 0; k < file_field.degree(); ++k)
        if (local.coeffs()[k] != 0)
          lifted += Cyc::root_power(field, k * scale).scaled(local.coeffs()[k]);
      row[column_to_class[col]] = std::move(lifted);
      ++col;
    }
    if (col != num_classes)
      throw std::invalid_argument("character table file: wrong number of values in a row");
    auto deg = row[0].integer_value();
    if (!deg || *deg < 1)
      throw std::invalid_argument("character table file: identity value is not a degree");
    t.degrees.push_back(*deg);
    t.rows.push_back(std::move(row));
  }
  if (t.rows.empty()) throw std::invalid_argument("character table file: no character rows");

  // canonical row order, then full verification
  std::vector<int> order(t.rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (t.degrees[a] != t.degrees[b]) return t.degrees[a] < t.degrees[b];
    return lex_less(t.rows[a], t.rows[b]);
  });
  CharacterTable sorted;
  sorted.field = t.field;
  for (int i : order) {
    sorted.rows.push_back(std::move(t.rows[i]));
    sorted.degrees.push_back(t.degrees[i]);
  }

  long long sq = 0;
  for (long long d : sorted.degrees) sq += d * d;
  if (sq != G.order())
    throw std::invalid_argument("character table file: degree squares do not sum to |G|");
  if (!verify_orthogonality(sorted, G))
    throw std::invalid_argument("character table file: orthogonality failure");
  return sorted;
}

CharacterTable read_chartab_file(const std::string& path, const Group& G) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open character table file: " + path);
  return read_chartab(in, G);
}

}  // namespace oliver
