#include "support/oracles.hpp"

#include "hne/core.hpp"

#include <doctest.h>

#include <limits>

using namespace hne;

namespace {

DataMatrix zeros(Index n, Index dim) {
  DataMatrix::Matrix m = DataMatrix::Matrix::Zero(n, dim);
  for (Index i = 0; i < n; ++i) m(i, 0) = static_cast<double>(i);
  return DataMatrix(m);
}

ErrorCode code_of(const EmbedConfig& cfg, const DataMatrix& data) {
  try {
    validate_config(cfg, data);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("defaults") {
  EmbedConfig cfg;
  CHECK(cfg.k == 5);
  CHECK(cfg.d == 2);
  CHECK(cfg.method == Method::Lle);
  CHECK(cfg.gamma == 1.0);
  CHECK(cfg.sigma_reg == 1e-3);
  CHECK(cfg.bhne_rotations == 2);
}

TEST_CASE("validate_config accepts and rejects") {
  EmbedConfig cfg;
  cfg.k = 5;
  cfg.d = 2;
  CHECK_NOTHROW(validate_config(cfg, zeros(1000, 3)));

  EmbedConfig big_k;
  big_k.k = 300;
  CHECK(code_of(big_k, zeros(300, 3)) == ErrorCode::KTooLarge);

  EmbedConfig big_d;
  big_d.d = 3;
  CHECK(code_of(big_d, zeros(100, 3)) == ErrorCode::DTooLarge);

  EmbedConfig d_vs_n;
  d_vs_n.k = 2;
  d_vs_n.d = 4;
  CHECK(code_of(d_vs_n, zeros(4, 10)) == ErrorCode::DTooLarge);

  EmbedConfig bad;
  bad.k = 0;
  CHECK(code_of(bad, zeros(10, 3)) == ErrorCode::InvalidArgument);
  bad = {};
  bad.gamma = 1.5;
  CHECK(code_of(bad, zeros(10, 3)) == ErrorCode::InvalidArgument);
  bad = {};
  bad.sigma_reg = -1.0;
  CHECK(code_of(bad, zeros(10, 3)) == ErrorCode::InvalidArgument);
  bad = {};
  bad.bhne_rotations = 0;
  CHECK(code_of(bad, zeros(10, 3)) == ErrorCode::InvalidArgument);
}

TEST_CASE("non-finite data is rejected") {
  DataMatrix::Matrix m = DataMatrix::Matrix::Zero(4, 2);
  m(2, 1) = std::numeric_limits<double>::quiet_NaN();
  try {
    DataMatrix data(m);
    FAIL("accepted NaN");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonFinite);
  }
  m(2, 1) = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(DataMatrix{m}, Error);
}

TEST_CASE("method names round trip") {
  for (Method m : {Method::Lle, Method::Ihne, Method::Rhne, Method::Bhne}) {
    auto parsed = parse_method(to_string(m));
    REQUIRE(parsed);
    CHECK(*parsed == m);
  }
  CHECK_FALSE(parse_method("hlle"));
}

TEST_CASE("neighbor index accessors") {
  // 0 -> {1,2}, 1 -> {0,2}, 2 -> {1,0}
  NeighborIndex idx(3, 2, {1, 2, 0, 2, 1, 0});
  CHECK(idx.inner(2, 0) == 1);
  CHECK(idx.outer(0, 0, 0) == 0);
  CHECK(idx.outer(0, 1, 1) == 0);
  CHECK(idx.outer_flat(0) == std::vector<Index>{0, 2, 1, 0});
  CHECK_THROWS_AS(NeighborIndex(3, 3, {}), Error);
  CHECK_THROWS_AS(NeighborIndex(3, 1, {1, 0, 7}), Error);
}

TEST_CASE("constraint report") {
  WeightSet w;
  w.variant = Method::Ihne;
  w.k = 2;
  w.inner.resize(1, 2);
  w.inner << 0.25, 0.75;
  w.outer = {0.5, 0.5, 2.0, -1.0};
  ConstraintReport r = check_constraints(w);
  CHECK(r.inner_sum == doctest::Approx(0.0));
  CHECK(r.outer_sum == doctest::Approx(0.0));
  CHECK(r.joint_sum == doctest::Approx(0.0));

  w.outer[0] = 0.6;
  r = check_constraints(w);
  CHECK(r.outer_sum == doctest::Approx(0.1));
  CHECK(r.joint_sum == doctest::Approx(0.025));
}
