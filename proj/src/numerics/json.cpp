#include "qsym/numerics/json.hpp"

#include <cmath>

#include "qsym/error.hpp"

namespace qsym {

void to_json(json& j, const CMatrix& m) {
  json data = json::array();
  for (const cplx& z : m.data()) data.push_back({z.real(), z.imag()});
  j = json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

void from_json(const json& j, CMatrix& m) {
  try {
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const json& data = j.at("data");
    if (!data.is_array() || data.size() != rows * cols)
      throw ParseError("matrix: data length does not match rows*cols");
    std::vector<cplx> entries;
    entries.reserve(data.size());
    for (const json& z : data) {
      double re = 0;
      double im = 0;
      if (z.is_number()) {
        re = z.get<double>();
      } else if (z.is_array() && z.size() == 2) {
        re = z[0].get<double>();
        im = z[1].get<double>();
      } else {
        throw ParseError("matrix: entry must be [re, im] or a real number");
      }
      if (!std::isfinite(re) || !std::isfinite(im)) throw ParseError("matrix: non-finite entry");
      entries.emplace_back(re, im);
    }
    m = CMatrix(rows, cols, std::move(entries));
  } catch (const json::exception& e) {
    throw ParseError(std::string("matrix: ") + e.what());
  }
}

void to_json(json& j, const Tolerance& t) {
  j = json{{"eps_proj", t.eps_proj}, {"eps_null", t.eps_null}, {"eps_equal", t.eps_equal}};
}

}  // namespace qsym
