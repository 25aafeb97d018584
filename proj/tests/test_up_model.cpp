#include <doctest.h>

#include <random>

#include "faultloc/error.hpp"
#include "faultloc/up_model.hpp"
#include "support/brute_force.hpp"
#include "support/fixtures.hpp"

using namespace faultloc;
using namespace faultloc::testing;

TEST_CASE("build_ensemble indexes paths by traversed non-monitor") {
  const Topology t = up_example();
  const PathEnsemble e = build_ensemble(t, up_example_paths());
  CHECK(e.size() == 2);
  CHECK(std::vector<PathId>(e.paths_through(1).begin(), e.paths_through(1).end()) == std::vector<PathId>{0, 1});
  CHECK(std::vector<PathId>(e.paths_through(2).begin(), e.paths_through(2).end()) == std::vector<PathId>{1});
  CHECK(e.unobserved().empty());
  CHECK_THROWS_AS(e.paths_through(0), InputError);

  const PathEnsemble empty = build_ensemble(t, {});
  CHECK(empty.paths_through(1).empty());
  CHECK(empty.unobserved() == NodeSet{1, 2});

  const Topology direct = Topology::create(3, std::vector<Edge>{{0, 1}, {0, 2}}, std::vector<NodeId>{0, 1});
  const PathEnsemble bare = build_ensemble(direct, {{0, 1}});
  CHECK(bare.paths_through(2).empty());
}

TEST_CASE("build_ensemble rejects malformed paths") {
  const Topology t = up_example();
  CHECK_THROWS_AS(build_ensemble(t, {{0}}), FormatError);
  CHECK_THROWS_AS(build_ensemble(t, {{1, 3}}), FormatError);
  CHECK_THROWS_AS(build_ensemble(t, {{0, 2, 3}}), FormatError);
  CHECK_THROWS_AS(build_ensemble(t, {{0, 9}}), FormatError);
}

TEST_CASE("walks with repeated nodes count each node once") {
  const Topology t = up_example();
  const PathEnsemble e = build_ensemble(t, {{0, 1, 2, 1, 3}});
  CHECK(e.paths_through(1).size() == 1);
  CHECK(e.paths_through(2).size() == 1);
}

TEST_CASE("msc examples") {
  const PathEnsemble e = build_ensemble(up_example(), up_example_paths());
  REQUIRE(brute_msc(e, 2) == Msc::finite(1));
  REQUIRE(brute_msc(e, 1).is_infinite());
  CHECK(msc(e, 2) == Msc::finite(1));
  CHECK(msc(e, 1).is_infinite());
  CHECK_THROWS_AS(msc(e, 0), InputError);

  const MscProfile p = msc_profile(e);
  CHECK(p.big_delta == Msc::finite(1));
  CHECK(p.entries.size() == 2);
  CHECK(p.entries[0].node == 1);

  SUBCASE("private paths") {
    // m=0 joined to v1=1 and v2=2 which both reach m2=3.
    const Topology t = Topology::create(4, std::vector<Edge>{{0, 1}, {1, 3}, {0, 2}, {2, 3}}, std::vector<NodeId>{0, 3});
    const MscProfile q = msc_profile(build_ensemble(t, {{0, 1, 3}, {0, 2, 3}}));
    CHECK(q.big_delta.is_infinite());
  }
  SUBCASE("always co-traversed") {
    const MscProfile q = msc_profile(build_ensemble(path4(), {{0, 1, 2, 3}}));
    CHECK(q.entries[0].msc == Msc::finite(1));
    CHECK(q.entries[1].msc == Msc::finite(1));
    CHECK(q.big_delta == Msc::finite(1));
  }
  SUBCASE("unobserved node") {
    const MscProfile q = msc_profile(build_ensemble(up_example(), {{0, 1, 3}}));
    CHECK(q.unobserved == NodeSet{2});
    CHECK(q.big_delta == Msc::finite(0));
  }
}

TEST_CASE("Msc ordering and formatting") {
  CHECK(Msc::finite(3) < Msc::infinite());
  CHECK(Msc::finite(2) < Msc::finite(3));
  CHECK(Msc::infinite().exceeds(1000));
  CHECK(Msc::finite(0).exceeds(-1));
  CHECK_FALSE(Msc::finite(0).exceeds(0));
  CHECK(Msc::infinite().to_string() == "inf");
  CHECK(Msc::finite(4).to_string() == "4");
}

TEST_CASE("msc matches exhaustive cover search on random ensembles") {
  std::size_t compared = 0;
  for (const auto& inst : make_corpus(200)) {
    const Topology& t = inst.topology;
    if (t.sigma() > 6) continue;
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const auto walks = random_walk_paths(t, seed * 97 + compared, 1 + seed * 3, 8);
      const PathEnsemble e = build_ensemble(t, walks);
      for (NodeId v : t.non_monitors()) {
        CHECK(msc(e, v) == brute_msc(e, v));
        ++compared;
      }
    }
  }
  CHECK(compared > 500);
}

TEST_CASE("msc monotonicity under path edits") {
  std::mt19937_64 rng(8);
  for (const auto& inst : make_corpus(120)) {
    const Topology& t = inst.topology;
    auto walks = random_walk_paths(t, rng(), 6, 8);
    if (walks.size() < 2) continue;
    const PathEnsemble base = build_ensemble(t, walks);
    const auto extra = random_walk_paths(t, rng(), 1, 8);
    if (!extra.empty()) {
      auto grown = walks;
      grown.push_back(extra.front());
      const PathEnsemble g = build_ensemble(t, grown);
      for (NodeId v : t.non_monitors()) {
        const auto& p = g.paths().back().nodes;
        if (std::find(p.begin(), p.end(), v) != p.end()) CHECK(msc(g, v) >= msc(base, v));
      }
    }
    const std::size_t drop = rng() % walks.size();
    auto shrunk = walks;
    shrunk.erase(shrunk.begin() + static_cast<std::ptrdiff_t>(drop));
    const PathEnsemble s = build_ensemble(t, shrunk);
    for (NodeId v : t.non_monitors()) {
      const auto& p = walks[drop];
      if (std::find(p.begin(), p.end(), v) == p.end() && !s.paths_through(v).empty())
        CHECK(msc(s, v) >= msc(base, v));
    }
  }
}

TEST_CASE("capacity guard on candidate sets") {
  // One monitor hub, a target v and many private partners each sharing a
  // distinct path with v.
  const std::size_t partners = 6;
  const std::size_t n = 2 + partners;
  std::vector<Edge> edges{{0, 1}};
  std::vector<std::vector<NodeId>> paths;
  for (NodeId w = 2; w < n; ++w) {
    edges.push_back({1, w});
    edges.push_back({w, 0});
    paths.push_back({0, 1, w, 0});
  }
  const Topology t = Topology::create(n, edges, std::vector<NodeId>{0});
  const PathEnsemble e = build_ensemble(t, paths);
  CHECK(msc(e, 1) == Msc::finite(partners));
  CHECK_THROWS_AS(msc(e, 1, MscOptions{3}), CapacityError);
}

TEST_CASE("restricted ensemble drops paths through removed nodes") {
  const Topology t = up_example();
  const PathEnsemble e = build_ensemble(t, up_example_paths());
  const SubTopology sub = remove_non_monitors(t, {2});
  const PathEnsemble r = e.restricted(sub);
  CHECK(r.size() == 1);
  CHECK(r.paths_through(*sub.to_new[1]).size() == 1);
}
