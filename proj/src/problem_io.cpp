#include "clipopt/problem_io.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace clipopt {

namespace {

using Json = nlohmann::ordered_json;

class Reader {
 public:
  explicit Reader(int n = 0) : n_(n) {}
  void set_n(int n) { n_ = n; }

  [[noreturn]] static void Fail(ParseErrorKind kind, const std::string& where,
                                const std::string& detail) {
    throw ParseError(kind, where, detail);
  }

  static void CheckKeys(const Json& obj, const std::string& where,
                        std::initializer_list<const char*> allowed) {
    std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [key, _] : obj.items()) {
      if (!ok.count(key)) Fail(ParseErrorKind::kInvalidValue, where + "/" + key, "unknown key");
    }
  }

  static const Json& Field(const Json& obj, const std::string& where, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) Fail(ParseErrorKind::kMissingField, where + "/" + key, "required");
    return *it;
  }

  static const Json& Object(const Json& j, const std::string& where) {
    if (!j.is_object()) Fail(ParseErrorKind::kWrongType, where, "expected an object");
    return j;
  }

  static double Number(const Json& j, const std::string& where) {
    if (!j.is_number()) Fail(ParseErrorKind::kWrongType, where, "expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) Fail(ParseErrorKind::kInvalidValue, where, "number must be finite");
    return v;
  }

  static double Positive(const Json& j, const std::string& where) {
    const double v = Number(j, where);
    if (v <= 0.0) Fail(ParseErrorKind::kInvalidValue, where, "must be positive");
    return v;
  }

  Vector Coefficients(const Json& j, const std::string& where) const {
    if (!j.is_array()) Fail(ParseErrorKind::kWrongType, where, "expected an array");
    if (static_cast<int>(j.size()) != n_) {
      Fail(ParseErrorKind::kDimensionMismatch, where,
           "array has length " + std::to_string(j.size()) + ", expected n = " + std::to_string(n_));
    }
    Vector v(n_);
    for (int k = 0; k < n_; ++k) v[k] = Number(j[static_cast<std::size_t>(k)], where + "/" + std::to_string(k));
    return v;
  }

  Vector Bounds(const Json& j, const std::string& where, double null_value) const {
    if (!j.is_array()) Fail(ParseErrorKind::kWrongType, where, "expected an array");
    if (static_cast<int>(j.size()) != n_) {
      Fail(ParseErrorKind::kDimensionMismatch, where,
           "array has length " + std::to_string(j.size()) + ", expected n = " + std::to_string(n_));
    }
    Vector v(n_);
    for (int k = 0; k < n_; ++k) {
      const Json& e = j[static_cast<std::size_t>(k)];
      v[k] = e.is_null() ? null_value : Number(e, where + "/" + std::to_string(k));
    }
    return v;
  }

  AffineExpr Expr(const Json& obj, const std::string& where) const {
    AffineExpr e;
    e.a = Coefficients(Field(obj, where, "a"), where + "/a");
    e.b = Number(Field(obj, where, "b"), where + "/b");
    return e;
  }

  static LossAtom Loss(const Json& j, const std::string& where) {
    Object(j, where);
    const Json& kind = Field(j, where, "kind");
    if (!kind.is_string()) Fail(ParseErrorKind::kWrongType, where + "/kind", "expected a string");
    const std::string k = kind.get<std::string>();
    if (k == "square") {
      CheckKeys(j, where, {"kind"});
      return LossAtom::Square();
    }
    if (k == "huber") {
      CheckKeys(j, where, {"kind", "delta"});
      return LossAtom::Huber(Positive(Field(j, where, "delta"), where + "/delta"));
    }
    if (k == "logistic") {
      CheckKeys(j, where, {"kind", "label"});
      const double label = Number(Field(j, where, "label"), where + "/label");
      if (label != 1.0 && label != -1.0)
        Fail(ParseErrorKind::kInvalidValue, where + "/label", "label must be +1 or -1");
      return LossAtom::Logistic(label);
    }
    Fail(ParseErrorKind::kUnknownAtom, where + "/kind", "unknown loss kind \"" + k + "\"");
  }

 private:
  int n_;
};

ProblemDocument ParseJson(const Json& root) {
  Reader::Object(root, "");
  Reader::CheckKeys(root, "", {"n", "base", "terms", "offset"});

  const Json& jn = Reader::Field(root, "", "n");
  if (!jn.is_number_integer()) Reader::Fail(ParseErrorKind::kWrongType, "/n", "expected an integer");
  const long long n = jn.get<long long>();
  if (n < 1 || n > (1 << 24)) Reader::Fail(ParseErrorKind::kInvalidValue, "/n", "n must be positive");
  Reader r(static_cast<int>(n));

  BaseObjective base;
  base.lower = Vector::Constant(n, -kInf);
  base.upper = Vector::Constant(n, kInf);
  if (auto it = root.find("base"); it != root.end()) {
    const Json& jb = Reader::Object(*it, "/base");
    Reader::CheckKeys(jb, "/base", {"ridge", "quad_terms", "hinge_terms", "box"});
    if (auto rt = jb.find("ridge"); rt != jb.end()) {
      base.ridge = Reader::Number(*rt, "/base/ridge");
      if (base.ridge < 0.0) Reader::Fail(ParseErrorKind::kInvalidValue, "/base/ridge", "must be >= 0");
    }
    for (const char* key : {"quad_terms", "hinge_terms"}) {
      auto qt = jb.find(key);
      if (qt == jb.end()) continue;
      const std::string where = std::string("/base/") + key;
      if (!qt->is_array()) Reader::Fail(ParseErrorKind::kWrongType, where, "expected an array");
      for (std::size_t k = 0; k < qt->size(); ++k) {
        const std::string w = where + "/" + std::to_string(k);
        const Json& jq = Reader::Object((*qt)[k], w);
        Reader::CheckKeys(jq, w, {"c", "a", "b"});
        const double c = Reader::Positive(Reader::Field(jq, w, "c"), w + "/c");
        AffineExpr e = r.Expr(jq, w);
        if (std::string(key) == "quad_terms") {
          base.quad_terms.push_back({c, std::move(e)});
        } else {
          base.hinge_terms.push_back({c, std::move(e)});
        }
      }
    }
    if (auto bx = jb.find("box"); bx != jb.end()) {
      const Json& jbox = Reader::Object(*bx, "/base/box");
      Reader::CheckKeys(jbox, "/base/box", {"l", "u"});
      base.lower = r.Bounds(Reader::Field(jbox, "/base/box", "l"), "/base/box/l", -kInf);
      base.upper = r.Bounds(Reader::Field(jbox, "/base/box", "u"), "/base/box/u", kInf);
      for (int j = 0; j < n; ++j) {
        if (base.lower[j] > base.upper[j]) {
          Reader::Fail(ParseErrorKind::kBoundOrder, "/base/box/l/" + std::to_string(j),
                       "l = " + std::to_string(base.lower[j]) + " > u = " + std::to_string(base.upper[j]));
        }
      }
    }
  }

  const Json& jt = Reader::Field(root, "", "terms");
  if (!jt.is_array()) Reader::Fail(ParseErrorKind::kWrongType, "/terms", "expected an array");
  if (jt.empty()) Reader::Fail(ParseErrorKind::kInvalidValue, "/terms", "need at least one term");
  std::vector<ClippedTerm> terms;
  for (std::size_t i = 0; i < jt.size(); ++i) {
    const std::string w = "/terms/" + std::to_string(i);
    const Json& ji = Reader::Object(jt[i], w);
    Reader::CheckKeys(ji, w, {"loss", "a", "b", "weight", "alpha"});
    ClippedTerm t;
    t.loss = Reader::Loss(Reader::Field(ji, w, "loss"), w + "/loss");
    t.expr = r.Expr(ji, w);
    t.weight = Reader::Positive(Reader::Field(ji, w, "weight"), w + "/weight");
    const Json& ja = Reader::Field(ji, w, "alpha");
    t.alpha = ja.is_null() ? kInf : Reader::Number(ja, w + "/alpha");
    terms.push_back(std::move(t));
  }

  double offset = 0.0;
  if (auto it = root.find("offset"); it != root.end()) offset = Reader::Number(*it, "/offset");

  try {
    return ProblemDocument{Problem(static_cast<int>(n), std::move(base), std::move(terms)), offset};
  } catch (const Error& e) {
    throw ParseError(ParseErrorKind::kInvalidValue, "", e.what());
  }
}

Json BoundsJson(const Vector& v) {
  Json arr = Json::array();
  for (Eigen::Index j = 0; j < v.size(); ++j) {
    if (std::isfinite(v[j])) {
      arr.push_back(v[j]);
    } else {
      arr.push_back(nullptr);
    }
  }
  return arr;
}

Json VectorJson(const Vector& v) {
  Json arr = Json::array();
  for (Eigen::Index j = 0; j < v.size(); ++j) arr.push_back(v[j]);
  return arr;
}

}  // namespace

ProblemDocument ParseProblemDocument(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(ParseErrorKind::kMalformed, "byte " + std::to_string(e.byte), e.what());
  }
  return ParseJson(root);
}

Problem ParseProblem(std::string_view text) { return ParseProblemDocument(text).problem; }

std::string SerializeProblem(const Problem& p, double offset) {
  Json root;
  root["n"] = p.dim();
  Json base;
  base["ridge"] = p.base().ridge;
  Json quads = Json::array();
  for (const QuadTerm& q : p.base().quad_terms) {
    quads.push_back(Json{{"c", q.c}, {"a", VectorJson(q.expr.a)}, {"b", q.expr.b}});
  }
  base["quad_terms"] = std::move(quads);
  if (!p.base().hinge_terms.empty()) {
    Json hinges = Json::array();
    for (const HingeTerm& h : p.base().hinge_terms) {
      hinges.push_back(Json{{"c", h.c}, {"a", VectorJson(h.expr.a)}, {"b", h.expr.b}});
    }
    base["hinge_terms"] = std::move(hinges);
  }
  base["box"] = Json{{"l", BoundsJson(p.base().lower)}, {"u", BoundsJson(p.base().upper)}};
  root["base"] = std::move(base);

  Json terms = Json::array();
  for (const ClippedTerm& t : p.terms()) {
    Json loss;
    switch (t.loss.kind) {
      case LossKind::kSquare: loss["kind"] = "square"; break;
      case LossKind::kHuber: loss["kind"] = "huber"; loss["delta"] = t.loss.delta; break;
      case LossKind::kLogistic: loss["kind"] = "logistic"; loss["label"] = t.loss.label; break;
      case LossKind::kHingeSquare: throw Error(ErrorCode::kInvalidInput, "hinge atom in a clipped term");
    }
    Json jt;
    jt["loss"] = std::move(loss);
    jt["a"] = VectorJson(t.expr.a);
    jt["b"] = t.expr.b;
    jt["weight"] = t.weight;
    if (std::isfinite(t.alpha)) {
      jt["alpha"] = t.alpha;
    } else {
      jt["alpha"] = nullptr;
    }
    terms.push_back(std::move(jt));
  }
  root["terms"] = std::move(terms);
  if (offset != 0.0) root["offset"] = offset;
  return root.dump(1) + "\n";
}

ProblemDocument LoadProblemFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open problem file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "failed reading " + path);
  return ParseProblemDocument(ss.str());
}

void SaveProblemFile(const std::string& path, const Problem& p, double offset) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write problem file " + path);
  out << SerializeProblem(p, offset);
  if (!out) throw Error(ErrorCode::kIo, "failed writing " + path);
}

}  // namespace clipopt
