#include <doctest.h>

#include "modalwb/error.hpp"
#include "sweeps.hpp"

using namespace modalwb;

TEST_CASE("sweep counts") {
  auto pc = sweep::run("pc-oracle", 2);
  CHECK(pc.total == 16);
  CHECK(pc.ok());
  auto raut = sweep::run("raut-oracle", 3);
  CHECK(raut.total == 512);
  CHECK(raut.ok());
  auto frames = sweep::run("axiom-frame", 3);
  CHECK(frames.total == 512);
  CHECK(frames.ok());
  for (const char* key : {"K_normal_additive", "T_iff_reflexive", "4_iff_transitive", "B_iff_symmetric"}) {
    CHECK(frames.counters[key] == 512);
  }
  auto cover = sweep::run("cover-oracle", 2);
  CHECK(cover.total == 256);
  CHECK(cover.ok());
}

TEST_CASE("sampled cover sweep is reproducible from its seed") {
  auto a = sweep::run("cover-oracle", 3, 9);
  auto b = sweep::run("cover-oracle", 3, 9);
  CHECK(a.total == 10000);
  CHECK(a.to_json() == b.to_json());
}

TEST_CASE("sweep errors") {
  try {
    sweep::run("pc-oracle", 4);
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
  }
  CHECK_THROWS_AS(sweep::run("nosuch", 2), Error);
  CHECK(sweep::run("proper-oracle", 2).to_json()["schema"] == 1);
}
