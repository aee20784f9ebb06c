#include "conformal/algebra_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace conformal {

namespace {

using nlohmann::json;

const json& require_field(const json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end())
    throw InputError(where + ": missing required field \"" + key + "\"");
  return *it;
}

int require_int(const json& value, const std::string& where) {
  if (!value.is_number_integer())
    throw InputError(where + ": expected an integer");
  return value.get<int>();
}

LieAlgebraSpec parse_document(const json& doc) {
  if (!doc.is_object())
    throw InputError("structure-constants file: top level must be a JSON object");
  const json& name_field = require_field(doc, "name", "structure-constants file");
  if (!name_field.is_string())
    throw InputError("\"name\": expected a string");
  const std::string name = name_field.get<std::string>();

  const int dim = require_int(require_field(doc, "dim", "structure-constants file"), "\"dim\"");
  if (dim <= 0)
    throw InputError("\"dim\": must be a positive integer");

  const json& brackets = require_field(doc, "brackets", "structure-constants file");
  if (!brackets.is_array())
    throw InputError("\"brackets\": expected an array");

  std::vector<Eigen::VectorXd> table(static_cast<std::size_t>(pair_count(dim)),
                                     Eigen::VectorXd::Zero(dim));
  std::set<std::pair<int, int>> seen;
  int index = 0;
  for (const json& entry : brackets) {
    std::ostringstream ctx;
    ctx << "brackets[" << index << "]";
    const std::string where = ctx.str();
    if (!entry.is_object())
      throw InputError(where + ": expected an object");
    const int i = require_int(require_field(entry, "i", where), where + ".i");
    const int j = require_int(require_field(entry, "j", where), where + ".j");
    if (i < 0 || i >= dim)
      throw InputError(where + ": index i=" + std::to_string(i) +
                       " out of range for dim " + std::to_string(dim));
    if (j < 0 || j >= dim)
      throw InputError(where + ": index j=" + std::to_string(j) +
                       " out of range for dim " + std::to_string(dim));
    if (i >= j)
      throw InputError(where + ": entries require i < j (got i=" + std::to_string(i) +
                       ", j=" + std::to_string(j) + ")");
    if (!seen.insert({i, j}).second)
      throw InputError(where + ": duplicate bracket pair (" + std::to_string(i) + ", " +
                       std::to_string(j) + ")");

    const json& terms = require_field(entry, "terms", where);
    if (!terms.is_array())
      throw InputError(where + ".terms: expected an array");
    Eigen::VectorXd& coords = table[static_cast<std::size_t>(pair_index(i, j, dim))];
    int term_index = 0;
    for (const json& term : terms) {
      std::ostringstream tctx;
      tctx << where << ".terms[" << term_index << "]";
      const std::string twhere = tctx.str();
      if (!term.is_object())
        throw InputError(twhere + ": expected an object");
      const int k = require_int(require_field(term, "k", twhere), twhere + ".k");
      if (k < 0 || k >= dim)
        throw InputError(twhere + ": index k=" + std::to_string(k) +
                         " out of range for dim " + std::to_string(dim));
      const json& c = require_field(term, "c", twhere);
      if (!c.is_number())
        throw InputError(twhere + ".c: expected a number");
      coords(k) += c.get<double>();
      ++term_index;
    }
    ++index;
  }
  return LieAlgebraSpec(name, dim, std::move(table));
}

} // namespace

LieAlgebraSpec parse_algebra_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("structure-constants file: malformed JSON: ") + e.what());
  }
  return parse_document(doc);
}

LieAlgebraSpec parse_algebra_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot open file \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_algebra_json(buffer.str());
}

} // namespace conformal
