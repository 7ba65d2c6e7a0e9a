#include <cmath>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "mainprob/tables.hpp"

using namespace mainprob;

namespace {

__extension__ typedef __int128 i128;

struct Checksum {
  const char* table;
  std::array<int, 3> index;
  long long values[4][2];  // at s^2 = 0, 1/2, 4/5, 1
};

const Checksum kChecksums[] = {
#include "table_checksums.inc"
};

const InclinationTable& table_named(const std::string& name) {
  for (const InclinationTable* t : theory_tables().all()) {
    if (t->name == name) return *t;
  }
  FAIL("no table " << name);
  throw;
}

// Exact value of a table polynomial at x = p/q as a fraction.
std::array<i128, 2> exact_value(const InclinationPolynomial& poly, long long p, long long q) {
  const auto& c = poly.numerator().ascending();
  const int d = static_cast<int>(c.size()) - 1;
  i128 num = 0, pk = 1;
  std::vector<i128> qpow(d + 1, 1);
  for (int k = 1; k <= d; ++k) qpow[k] = qpow[k - 1] * q;
  for (int k = 0; k <= d; ++k) {
    num += c[k] * pk * qpow[d - k];
    pk *= p;
  }
  return {num, qpow[d] * poly.denominator()};
}

}  // namespace

TEST_CASE("table entries match the frozen exact checksums") {
  const std::array<std::array<long long, 2>, 4> xs{{{0, 1}, {1, 2}, {4, 5}, {1, 1}}};
  int checked = 0;
  for (const Checksum& c : kChecksums) {
    const InclinationTable& t = table_named(c.table);
    const InclinationPolynomial* poly = t.find(c.index);
    REQUIRE_MESSAGE(poly != nullptr, c.table, " ", c.index[0], ",", c.index[1], ",", c.index[2]);
    for (int i = 0; i < 4; ++i) {
      const auto v = exact_value(*poly, xs[i][0], xs[i][1]);
      CHECK_MESSAGE(v[0] * c.values[i][1] == c.values[i][0] * v[1], c.table, " ", c.index[0], ",",
                    c.index[1], ",", c.index[2], " at x", i);
      // Horner in double cancels near s^2 = 4/5; scale by the coefficient sizes.
      double scale = 0;
      for (auto k : poly->numerator().ascending()) scale += std::abs(double(k));
      scale /= double(poly->denominator());
      const double x = double(xs[i][0]) / double(xs[i][1]);
      CHECK(std::abs((*poly)(x) - double(c.values[i][0]) / double(c.values[i][1])) <= 1e-15 * scale);
    }
    ++checked;
  }
  CHECK(checked == static_cast<int>(std::size(kChecksums)));
}

TEST_CASE("worked rows") {
  const TheoryTables& t = theory_tables();
  // gamma_{2,0,0} at s = 1: -8 (200 - 455 + 345 - 88) = -16.
  CHECK((*t.gamma2.find({0, 0, 0}))(1.0) == -16.0);
  // Gamma_{2,1,6,2} = 6 (5 s^2 - 4)^2 vanishes at s^2 = 4/5.
  const InclinationPolynomial* g = t.Gamma2.find({1, 6, 2});
  REQUIRE(g != nullptr);
  CHECK(g->numerator() == 6 * pow(IntPoly{5, -4}, 2));
  CHECK(exact_value(*g, 4, 5)[0] == 0);
  // Phi_{2,1} at s^2 = 2/3 is 8 - 16/3 - 20/9 = 4/9.
  const auto phi21 = exact_value(*t.Phi2.find({1, 0, 0}), 2, 3);
  CHECK(phi21[0] * 9 == 4 * phi21[1]);
  CHECK(t.lambda2.find({0, 0, 0})->numerator() == 5 * IntPoly{7, -16, 8});
  for (int j = 0; j <= 2; ++j) CHECK(t.lambda2.find({j, 0, 0}) != nullptr);
}

TEST_CASE("Phi3 caption relations hold identically") {
  const InclinationTable& phi3 = theory_tables().Phi3;
  const IntPoly base = phi3.find({0, 3, 0})->numerator();
  CHECK(2 * phi3.find({1, 0, 0})->numerator() == 15 * base);
  CHECK(2 * phi3.find({1, 2, 0})->numerator() == -3 * base);
  CHECK(phi3.find({2, 0, 0})->numerator() == 3 * base);
  CHECK(2 * phi3.find({3, 0, 0})->numerator() == base);
}

TEST_CASE("table JSON") {
  const std::string a = tables_json();
  CHECK(a == tables_json());
  const auto doc = nlohmann::json::parse(a);
  CHECK(doc["variable"] == "s^2");
  CHECK(doc["order"] == "descending");
  bool found = false;
  for (const auto& row : doc["tables"]["gamma2"]) {
    if (row["index"] == nlohmann::json::array({0, 1})) {
      CHECK(row["coefficients"] == nlohmann::json::array({375, -930, 780, -224}));
      CHECK(row["denominator"] == 1);
      found = true;
    }
  }
  CHECK(found);
  for (const char* name : {"gamma2", "Gamma2", "gamma3", "Gamma3", "lambda2", "Phi2", "Lambda2",
                           "lambda3", "Phi3", "Lambda3", "Psi", "omega", "Omega"}) {
    CHECK_MESSAGE(doc["tables"].contains(name), name);
    CHECK(!doc["tables"][name].empty());
  }
  CHECK(doc["tables"]["lambda2"].size() == 3);
}
