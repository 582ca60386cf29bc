#include "monpure/report.hpp"

#include <chrono>
#include <sstream>

namespace monpure {

namespace {

using json = nlohmann::ordered_json;

json vec_json(const IntVector& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(x.get_str());
  return a;
}

json vecs_json(const std::vector<IntVector>& vs) {
  json a = json::array();
  for (const IntVector& v : vs) a.push_back(vec_json(v));
  return a;
}

json rat_vec_json(const RatVector& v) {
  json a = json::array();
  for (std::size_t i = 0; i < v.dim(); ++i) a.push_back(rat_to_string(v.coord(i)));
  return a;
}

struct Builder {
  ReportDocument doc;
  bool has_estimates = false;
  bool has_undecided = false;

  void add(const std::string& field, const std::string& provenance, json value) {
    if (provenance.rfind("estimate", 0) == 0) has_estimates = true;
    if (provenance == "undecided") has_undecided = true;
    doc.fields.push_back({field, provenance, std::move(value)});
  }
};

std::string estimate_tag(int t_budget) {
  return "estimate(t_budget=" + std::to_string(t_budget) + ")";
}

void add_echo(Builder& b, const PurityEngine& eng) {
  const AffineMonoid& M = eng.monoid();
  b.add("ambient_dim", "exact", std::to_string(M.ambient_dim()));
  b.add("generators", "exact", vecs_json(M.generators()));
  b.add("rank", "exact", std::to_string(M.rank()));
  json degs = json::array();
  for (const Int& d : M.degrees()) degs.push_back(d.get_str());
  b.add("generator_degrees", "exact", degs);
}

void add_seminormal(Builder& b, PurityEngine& eng) {
  const SeminormalityCertificate& cert = eng.decide_seminormal();
  b.add("seminormal", "exact", cert.seminormal ? "true" : "false");
  b.add("witness_prime", "exact", cert.witness_prime.get_str());
  json bad = json::array();
  for (const Int& p : cert.bad_primes) bad.push_back(p.get_str());
  b.add("bad_primes", "exact", bad);
  if (cert.violation)
    b.add("seminormality_violation", "exact", vec_json(*cert.violation));
}

void add_normal(Builder& b, PurityEngine& eng) {
  const NormalityResult& res = eng.decide_normal();
  switch (res.verdict) {
    case Verdict::True:
      b.add("normal", "exact", "true");
      break;
    case Verdict::False:
      b.add("normal", "exact", "false");
      break;
    case Verdict::Undecided:
      b.add("normal", "undecided", "undecided");
      break;
  }
  if (res.hilbert.decided)
    b.add("hilbert_basis", "exact", vecs_json(res.hilbert.basis));
  if (res.witness) b.add("normality_witness", "exact", vec_json(*res.witness));
}

void add_vm(Builder& b, PurityEngine& eng, const Int& m) {
  b.add("m", "exact", m.get_str());
  if (m >= 2) b.add("in_A", "exact", eng.is_in_A(m) ? "true" : "false");
  try {
    const PureTranslationSet& vm = eng.compute_Vm(m);
    b.add("vm_count", "exact", std::to_string(vm.elements.size()));
    json els = json::array();
    for (const RatVector& a : vm.elements) els.push_back(rat_vec_json(a));
    b.add("vm_elements", "exact", els);
    if (vm.max_degree)
      b.add("vm_max_degree", "exact", rat_to_string(*vm.max_degree));
  } catch (const BudgetError&) {
    b.add("vm_count", "undecided", "undecided");
  }
}

void add_mpt(Builder& b, PurityEngine& eng) {
  const PureThreshold& mpt = eng.pure_threshold();
  switch (mpt.kind) {
    case PureThreshold::Kind::NegInfinity:
      b.add("mpt", "exact", "-inf");
      break;
    case PureThreshold::Kind::Exact:
      b.add("mpt", "exact", rat_to_string(mpt.value));
      break;
    case PureThreshold::Kind::Estimate: {
      b.add("mpt", estimate_tag(eng.budgets().t_budget), rat_to_string(mpt.value));
      json trace = json::array();
      for (const auto& [m, deg] : mpt.trace)
        trace.push_back({{"m", m.get_str()}, {"max_degree", rat_to_string(deg)}});
      b.add("mpt_trace", estimate_tag(eng.budgets().t_budget), trace);
      break;
    }
  }
}

void add_face(Builder& b, PurityEngine& eng) {
  const PurePrimeFace& f = eng.pure_prime_face();
  if (!f.defined) {
    b.add("mpdim", "exact", "-inf");
    b.add("pure_prime", "exact", "all of M");
    return;
  }
  b.add("mpdim", f.verified ? "exact" : "estimate(face unverified)",
        std::to_string(f.mpdim));
  json gens = json::array();
  for (std::size_t j : f.face.generator_indices) gens.push_back(std::to_string(j));
  b.add("face_generator_indices", "exact", gens);
  b.add("face_verified", "exact", f.verified ? "true" : "false");
  json evidence = json::array();
  for (const auto& [m, pts] : f.evidence)
    evidence.push_back({{"m", m.get_str()}, {"points", vecs_json(pts)}});
  b.add("face_evidence", "exact", evidence);
  b.add("pure_prime", "exact", "M minus (M cap F_M)");
}

void add_ratio(Builder& b, PurityEngine& eng) {
  const RatioSignature& rs = eng.pure_ratio_signature();
  if (!rs.defined) {
    b.add("mpr", "exact", "undefined");
    b.add("mps", "exact", "0");
    return;
  }
  if (rs.exact) {
    b.add("mpr", "exact", rat_to_string(rs.mpr));
    b.add("mps", "exact", rat_to_string(rs.mps));
    return;
  }
  const std::string tag = estimate_tag(eng.budgets().t_budget);
  b.add("mpr", tag, rat_to_string(rs.mpr));
  json trace = json::array();
  for (const auto& [m, ratio] : rs.count_trace)
    trace.push_back({{"m", m.get_str()}, {"ratio", rat_to_string(ratio)}});
  b.add("mpr_count_trace", tag, trace);
  if (rs.b_lower_bound)
    b.add("mpr_b_region_lower_bound", "exact", rat_to_string(*rs.b_lower_bound));
  // mps vanishes unless M is normal; keep it estimated while normality is open
  bool normal_known = eng.decide_normal().verdict != Verdict::Undecided;
  b.add("mps", normal_known ? "exact" : "undecided", rat_to_string(rs.mps));
}

void add_ring_bounds(Builder& b, PurityEngine& eng) {
  RingBounds rb = eng.ring_bounds();
  if (!rb.defined) {
    b.add("ring_bounds", "exact", "undefined (not seminormal)");
    return;
  }
  const std::string prov = rb.estimate ? estimate_tag(eng.budgets().t_budget) : "exact";
  b.add("a_invariant_upper_bound", prov, rat_to_string(rb.a_bound));
  b.add("regularity_upper_bound", prov, rat_to_string(rb.reg_bound));
  b.add("presentation_degree_upper_bound", prov, rat_to_string(rb.beta_bound));
  b.add("depth_lower_bound", "exact", std::to_string(rb.depth_lower));
}

}  // namespace

const ReportField* ReportDocument::find(const std::string& field) const {
  for (const ReportField& f : fields)
    if (f.field == field) return &f;
  return nullptr;
}

std::string serialize_report(const ReportDocument& doc) {
  std::ostringstream os;
  json header;
  header["schema_version"] = doc.schema_version;
  header["name"] = doc.name;
  os << header.dump() << '\n';
  for (const ReportField& f : doc.fields) {
    json line;
    line["field"] = f.field;
    line["provenance"] = f.provenance;
    line["value"] = f.value;
    os << line.dump() << '\n';
  }
  return os.str();
}

ReportDocument parse_report(const std::string& text) {
  ReportDocument doc;
  std::istringstream in(text);
  std::string line;
  bool saw_header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(std::string("report line: ") + e.what());
    }
    if (!saw_header) {
      if (!j.contains("schema_version"))
        throw InputError("report header must carry schema_version");
      doc.schema_version = j["schema_version"].get<std::string>();
      if (j.contains("name")) doc.name = j["name"].get<std::string>();
      saw_header = true;
      continue;
    }
    ReportField f;
    f.field = j.at("field").get<std::string>();
    f.provenance = j.at("provenance").get<std::string>();
    f.value = j.at("value");
    doc.fields.push_back(std::move(f));
  }
  if (!saw_header) throw InputError("empty report document");
  return doc;
}

RunResult run_report(PurityEngine& eng, const std::string& name,
                     const RunOptions& options) {
  auto start = std::chrono::steady_clock::now();
  Builder b;
  b.doc.name = name;
  add_echo(b, eng);
  switch (options.verb) {
    case ReportVerb::Check:
      add_seminormal(b, eng);
      add_normal(b, eng);
      break;
    case ReportVerb::Vm:
      add_vm(b, eng, options.vm_m);
      break;
    case ReportVerb::Mpt:
      add_seminormal(b, eng);
      add_mpt(b, eng);
      break;
    case ReportVerb::Face:
      add_seminormal(b, eng);
      add_face(b, eng);
      break;
    case ReportVerb::Ratio:
      add_seminormal(b, eng);
      add_face(b, eng);
      add_ratio(b, eng);
      break;
    case ReportVerb::Full:
      add_seminormal(b, eng);
      add_normal(b, eng);
      b.add("kunz_free", "exact", eng.kunz_free() ? "true" : "false");
      add_mpt(b, eng);
      add_face(b, eng);
      add_ratio(b, eng);
      add_ring_bounds(b, eng);
      break;
  }
  if (options.with_timing) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    b.add("timing_ms", "info", std::to_string(ms));
  }
  return {std::move(b.doc), b.has_estimates, b.has_undecided};
}

RunResult run_report(const MonoidFile& file, const RunOptions& options) {
  PurityEngine eng(AffineMonoid::validate(file.generators), file.budgets);
  return run_report(eng, file.name, options);
}

}  // namespace monpure
