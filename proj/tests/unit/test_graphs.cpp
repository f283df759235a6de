#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <random>

#include "qsym/error.hpp"
#include "qsym/graphs/composite.hpp"
#include "qsym/graphs/graph.hpp"
#include "qsym/graphs/rado.hpp"

using namespace qsym;

namespace {

Id v(const GraphPtr& g, const char* label) { return parse_vertex(*g, label); }

// Sample ids that are vertices: the first few plus a seeded spread.
std::vector<Id> sample_ids(const GraphFamily& g, std::size_t count, std::uint64_t seed) {
  std::vector<Id> out;
  const Id limit = g.order().value_or(400);
  for (Id i = 0; i < std::min<Id>(limit, 12); ++i) out.push_back(i);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Id> pick(0, limit - 1);
  while (out.size() < count) {
    const Id x = pick(rng);
    if (g.contains(x)) out.push_back(x);
  }
  return out;
}

}  // namespace

TEST_CASE("relations and distances on small examples") {
  const auto k4 = make_graph("complete:4");
  CHECK(k4->rel(2, 2) == Rel::equal);
  CHECK(k4->rel(0, 3) == Rel::adjacent);

  const auto johnson = make_graph("johnson:2");
  const auto kneser = make_graph("kneser:2");
  CHECK(johnson->rel(v(johnson, "[1,2]"), v(johnson, "[1,3]")) == Rel::adjacent);
  CHECK(kneser->rel(v(kneser, "[1,2]"), v(kneser, "[1,3]")) == Rel::distinct_nonadjacent);
  CHECK(kneser->rel(v(kneser, "[1,2]"), v(kneser, "[3,4]")) == Rel::adjacent);
  CHECK(johnson->distance(v(johnson, "[1,2]"), v(johnson, "[3,4]")) == 2);
  CHECK(kneser->distance(v(kneser, "[1,2]"), v(kneser, "[1,3]")) == 2);
  // Set labels are unordered.
  CHECK(v(johnson, "[2,1]") == v(johnson, "[1,2]"));
  CHECK(johnson->decode(v(johnson, "[5,0]")) == json::parse("[0,5]"));

  const auto j3 = make_graph("johnson:3");
  CHECK(j3->distance(v(j3, "[0,1,2]"), v(j3, "[3,4,5]")) == 3);

  const auto line = make_graph("line");
  CHECK(line->distance(v(line, "-3"), v(line, "4")) == 7);
  CHECK(line->rel(v(line, "-1"), v(line, "0")) == Rel::adjacent);
  CHECK(line->decode(v(line, "-17")) == -17);

  const auto c5 = make_graph("cycle:5");
  CHECK(c5->distance(0, 3) == 2);
  CHECK(c5->adjacent(4, 0));

  const auto u = make_graph("union(cycle:3, 2)");
  CHECK(u->order() == 6);
  CHECK(u->distance(v(u, "[0,1]"), v(u, "[1,1]")) == kInfiniteDistance);
  CHECK(u->distance(v(u, "[1,0]"), v(u, "[1,2]")) == 1);
  CHECK_FALSE(u->is_connected());
  const auto uinf = make_graph("union(line, inf)");
  CHECK(uinf->distance(v(uinf, "[7,-2]"), v(uinf, "[7,3]")) == 5);
  CHECK(uinf->distance(v(uinf, "[7,-2]"), v(uinf, "[6,-2]")) == kInfiniteDistance);

  const auto path = make_graph("path:4");
  CHECK(path->distance(0, 3) == 3);
  CHECK(path->is_bipartite());
}

TEST_CASE("hamming graph: adjacency is Hamming distance 1") {
  const auto h = make_graph("hamming:3");
  CHECK(h->name() == "hamming:3");
  CHECK(v(h, "[0,0,0]") == 0);
  CHECK(v(h, "[2,0,0,0]") == v(h, "[2]"));
  CHECK(h->adjacent(v(h, "[]"), v(h, "[0,0,0,0,1]")));
  CHECK_FALSE(h->adjacent(v(h, "[1]"), v(h, "[0,1]")));
  CHECK(h->distance(v(h, "[1,2]"), v(h, "[0,2,0,1]")) == 2);
  const auto ids = sample_ids(*h, 60, 3);
  for (Id a : ids) {
    for (Id b : ids) {
      auto ta = std::dynamic_pointer_cast<const WeakPowerGraph>(h)->tuple(a);
      auto tb = std::dynamic_pointer_cast<const WeakPowerGraph>(h)->tuple(b);
      const std::size_t len = std::max(ta.size(), tb.size());
      ta.resize(len);
      tb.resize(len);
      std::size_t diff = 0;
      for (std::size_t k = 0; k < len; ++k) diff += ta[k] != tb[k];
      CHECK(h->adjacent(a, b) == (diff == 1));
      CHECK(h->distance(a, b) == diff);
    }
  }
}

TEST_CASE("products of K2 and direct-product adjacency") {
  const auto k2 = make_graph("complete:2");
  const auto box = make_graph("product:cartesian(complete:2, complete:2)");
  REQUIRE(box->order() == 4);
  std::size_t edges = 0;
  for (Id a = 0; a < 4; ++a) {
    CHECK(box->neighbours(a)->size() == 2);
    for (Id b = a + 1; b < 4; ++b) edges += box->adjacent(a, b);
  }
  CHECK(edges == 4);  // 4-cycle
  CHECK(box->distance(v(box, "[0,0]"), v(box, "[1,1]")) == 2);

  const auto strong = make_graph("product:strong(complete:2, complete:2)");
  for (Id a = 0; a < 4; ++a) {
    for (Id b = a + 1; b < 4; ++b) CHECK(strong->adjacent(a, b));
  }

  const auto direct = make_graph("product:direct(cycle:5, path:3)");
  const auto c5 = make_graph("cycle:5");
  const auto p3 = make_graph("path:3");
  for (Id x1 = 0; x1 < 5; ++x1) {
    for (Id y1 = 0; y1 < 3; ++y1) {
      for (Id x2 = 0; x2 < 5; ++x2) {
        for (Id y2 = 0; y2 < 3; ++y2) {
          const Id a = std::dynamic_pointer_cast<const ProductGraph>(direct)->vertex(x1, y1);
          const Id b = std::dynamic_pointer_cast<const ProductGraph>(direct)->vertex(x2, y2);
          CHECK(direct->adjacent(a, b) == (c5->adjacent(x1, x2) && p3->adjacent(y1, y2)));
        }
      }
    }
  }
  // Infinite factors: cartesian distance adds, strong takes the maximum.
  const auto ll = make_graph("product:cartesian(line, line)");
  CHECK(ll->distance(v(ll, "[0,0]"), v(ll, "[3,-4]")) == 7);
  const auto ls = make_graph("product:strong(line, line)");
  CHECK(ls->distance(v(ls, "[0,0]"), v(ls, "[3,-4]")) == 4);
  (void)k2;
}

TEST_CASE("graph invariants on sampled vertices") {
  const std::vector<std::string> specs = {
      "complete:5", "cycle:7", "path:6", "line", "johnson:2", "kneser:2", "johnson:3",
      "hamming:2", "rado", "union(cycle:4, 3)", "union(line, inf)", "complement(cycle:6)",
      "complement(johnson:2)", "product:direct(cycle:5, complete:3)",
      "product:cartesian(cycle:4, line)", "product:strong(path:3, cycle:5)", "weak(path:3)",
      "weak(line)"};
  for (const auto& spec : specs) {
    CAPTURE(spec);
    const auto g = make_graph(spec);
    CHECK(make_graph(g->name())->name() == g->name());
    const auto ids = sample_ids(*g, 24, 17);
    for (Id a : ids) {
      CHECK_FALSE(g->adjacent(a, a));
      CHECK(g->distance(a, a) == 0);
      CHECK(g->encode(g->decode(a)) == a);
      for (Id b : ids) {
        CHECK(g->adjacent(a, b) == g->adjacent(b, a));
        if (a == b) continue;
        const Distance d = g->distance(a, b);
        CHECK(d == g->distance(b, a));
        CHECK(d >= 1);
        CHECK((d == 1) == g->adjacent(a, b));
      }
    }
    for (std::size_t i = 0; i + 2 < ids.size(); i += 3) {
      const Distance ab = g->distance(ids[i], ids[i + 1]);
      const Distance bc = g->distance(ids[i + 1], ids[i + 2]);
      const Distance ac = g->distance(ids[i], ids[i + 2]);
      if (ab != kInfiniteDistance && bc != kInfiniteDistance) CHECK(ac <= ab + bc);
    }
  }
}

TEST_CASE("johnson and kneser are complementary") {
  const auto j = make_graph("johnson:2");
  const auto k = make_graph("kneser:2");
  const auto cj = make_graph("complement(johnson:2)");
  const auto ids = sample_ids(*j, 40, 5);
  for (Id a : ids) {
    for (Id b : ids) {
      if (a == b) continue;
      CHECK(j->rel(a, b) != k->rel(a, b));
      CHECK(cj->rel(a, b) == k->rel(a, b));
    }
  }
  CHECK(make_graph("complement(complement(line))")->name() == "line");
}

TEST_CASE("neighbour differences") {
  const auto line = make_graph("line");
  const auto d = line->distinguishing(v(line, "0"), v(line, "1"));
  REQUIRE(d.has_value());
  std::vector<Id> expect{v(line, "-1"), v(line, "2")};
  std::sort(expect.begin(), expect.end());
  CHECK(*d == expect);
  CHECK_FALSE(make_graph("johnson:2")->distinguishing(0, 1).has_value());
  const auto k4 = make_graph("complete:4");
  CHECK(k4->distinguishing(0, 1)->empty());
  const auto c6 = make_graph("cycle:6");
  CHECK(*c6->distinguishing(0, 3) == std::vector<Id>{1, 2, 4, 5});
}

TEST_CASE("rado vertices, adjacency and witnesses") {
  CHECK(rado_vertex(0) == 5);
  CHECK(rado_vertex(1) == 13);
  CHECK(rado_vertex(2) == 17);
  CHECK(rado_vertex(3) == 29);
  CHECK(rado_index(29) == 3);
  CHECK_FALSE(rado_index(7).has_value());
  CHECK_FALSE(rado_index(9).has_value());
  CHECK(rado_adjacent(13, 17));  // 8^2 = 64 = 13 mod 17
  CHECK_FALSE(rado_adjacent(5, 13));
  for (Id i = 0; i < 50; ++i) {
    for (Id j = i + 1; j < 50; ++j) {
      CHECK(rado_adjacent(rado_vertex(i), rado_vertex(j)) ==
            rado_adjacent(rado_vertex(j), rado_vertex(i)));
    }
  }
  CHECK(rado_witness({5}, {}) == 29);
  CHECK(rado_witness({}, {5}) == 13);
  CHECK(rado_witness({}, {}) == 5);
  CHECK_THROWS_AS((void)rado_witness({5}, {5}), DomainError);
  CHECK_THROWS_AS((void)rado_adjacent(7, 13), CodecError);
  CHECK_THROWS_AS((void)rado_witness({5, 13, 17}, {29, 37, 41}, 30), SearchExhausted);

  const auto g = make_graph("rado");
  CHECK(g->decode(1) == 13);
  CHECK(v(g, "17") == 2);
  CHECK_THROWS_AS((void)v(g, "19"), CodecError);
}

TEST_CASE("rado extension property on the first eight vertices") {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Id> first;
  for (Id i = 0; i < 8; ++i) first.push_back(rado_vertex(i));
  std::size_t checked_pairs = 0;
  // Each vertex goes to A, B or neither: 3^8 assignments, sizes capped at 3.
  for (int code = 0; code < 6561; ++code) {
    std::vector<Id> a;
    std::vector<Id> b;
    int c = code;
    for (Id p : first) {
      if (c % 3 == 1) a.push_back(p);
      if (c % 3 == 2) b.push_back(p);
      c /= 3;
    }
    if (a.size() > 3 || b.size() > 3) continue;
    const Id w = rado_witness(a, b, 1'000'000);
    for (Id x : a) CHECK(rado_adjacent(x, w));
    for (Id x : b) CHECK_FALSE(rado_adjacent(x, w));
    ++checked_pairs;
  }
  CHECK(checked_pairs > 0);
  CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(30));
}

TEST_CASE("pair codecs are bijective") {
  for (Id z = 0; z < 2000; ++z) {
    const auto [a, b] = cantor_unpair(z);
    CHECK(cantor_pair(a, b) == z);
  }
  const PairCodec finite_second(std::nullopt, 5);
  const PairCodec finite_first(3, std::nullopt);
  for (Id a = 0; a < 3; ++a) {
    for (Id b = 0; b < 5; ++b) {
      CHECK(finite_second.decode(finite_second.encode(a, b)) == std::pair<Id, Id>{a, b});
      CHECK(finite_first.decode(finite_first.encode(a, b)) == std::pair<Id, Id>{a, b});
    }
  }
  CHECK_THROWS_AS((void)cantor_pair(~Id{0}, 1), OverflowError);
}

TEST_CASE("graph spec parsing and codec errors") {
  for (const char* bad : {"", "nope", "complete", "complete:0", "cycle:2", "union(line)",
                          "product:weird(line, line)", "line extra", "johnson:0", "union(line, x)"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS((void)make_graph(bad), ParseError);
  }
  const auto k4 = make_graph("complete:4");
  CHECK_THROWS_AS((void)k4->adjacent(0, 4), CodecError);
  CHECK_THROWS_AS((void)v(k4, "\"a\""), CodecError);
  CHECK_THROWS_AS((void)v(k4, "{"), ParseError);
  const auto j = make_graph("johnson:2");
  CHECK_THROWS_AS((void)v(j, "[1,1]"), CodecError);
  CHECK_THROWS_AS((void)v(j, "[1,2,3]"), CodecError);
  CHECK(make_graph(" product:strong( cycle:3 ,line ) ")->name() == "product:strong(cycle:3, line)");
}
