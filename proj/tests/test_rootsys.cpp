#include <doctest.h>

#include "oracles.hpp"
#include "roofcalc/errors.hpp"
#include "roofcalc/rootsys.hpp"

using namespace roofcalc;

TEST_CASE("positive root counts") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(build_root_system(RootType::A, n)->positive_roots().size() == static_cast<std::size_t>(n * (n + 1) / 2));
    CHECK(build_root_system(RootType::C, n)->positive_roots().size() == static_cast<std::size_t>(n * n));
    if (n >= 3) CHECK(build_root_system(RootType::D, n)->positive_roots().size() == static_cast<std::size_t>(n * (n - 1)));
  }
  CHECK(build_root_system(RootType::F4, 4)->positive_roots().size() == 24);
  CHECK(build_root_system(RootType::G2, 2)->positive_roots().size() == 6);
}

TEST_CASE("F4 conventions") {
  auto f4 = build_root_system("F4", 4);
  CHECK(f4->label() == "F4");
  // nodes 1 and 2 long, 3 and 4 short
  CHECK(f4->half_norm(1) == 2);
  CHECK(f4->half_norm(2) == 2);
  CHECK(f4->half_norm(3) == 1);
  CHECK(f4->half_norm(4) == 1);
  CHECK(f4->reflect(f4->fundamental(2), 2) == Weight{1, -1, 2, 0});
  CHECK(f4->rho() == Weight{1, 1, 1, 1});
  const auto& roots = f4->positive_roots();
  const auto top = std::max_element(roots.begin(), roots.end(),
                                    [](const PositiveRoot& a, const PositiveRoot& b) { return a.height < b.height; });
  CHECK(top->height == 11);
  CHECK(top->simple == std::vector<std::int64_t>{2, 3, 4, 2});
  CHECK(top->weight == Weight{1, 0, 0, 0});  // adjoint representation
}

TEST_CASE("G2 short and long") {
  auto g2 = build_root_system(RootType::G2, 2);
  CHECK(g2->half_norm(1) == 1);
  CHECK(g2->half_norm(2) == 3);
  std::int64_t top = 0;
  for (const auto& b : g2->positive_roots()) top = std::max(top, b.height);
  CHECK(top == 5);
}

TEST_CASE("simple roots are the Cartan rows and pair to 2") {
  for (auto [t, n] : {std::pair{RootType::A, 4}, {RootType::C, 5}, {RootType::D, 5}, {RootType::F4, 4}, {RootType::G2, 2}}) {
    auto sys = build_root_system(t, n);
    for (int i = 1; i <= n; ++i) {
      CHECK(pair(*sys, sys->simple_root(i), i) == 2);
      for (int j = 1; j <= n; ++j) CHECK(sys->simple_root(i)[static_cast<std::size_t>(j - 1)] == sys->cartan(i, j));
    }
  }
}

TEST_CASE("coroots of positive roots pair to 2 with their root") {
  for (auto [t, n] : {std::pair{RootType::C, 4}, {RootType::D, 5}, {RootType::F4, 4}, {RootType::G2, 2}}) {
    auto sys = build_root_system(t, n);
    for (const auto& b : sys->positive_roots()) CHECK(sys->coroot_pairing(b.weight, b) == 2);
  }
}

TEST_CASE("C_n bottom node is long") {
  auto c3 = build_root_system(RootType::C, 3);
  CHECK(c3->cartan(3, 2) == -2);
  CHECK(c3->cartan(2, 3) == -1);
  CHECK(c3->half_norm(3) == 2);
  CHECK(c3->half_norm(1) == 1);
}

TEST_CASE("orthogonal coordinates round trip") {
  for (auto [t, n] : {std::pair{RootType::A, 3}, {RootType::C, 4}, {RootType::D, 4}, {RootType::D, 5}}) {
    auto sys = build_root_system(t, n);
    for (int k = -2; k <= 2; ++k) {
      Weight w(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = (k * (i + 1)) % 3;
      CHECK(from_orthogonal(*sys, to_orthogonal(*sys, w)) == w);
    }
  }
  auto c2 = build_root_system(RootType::C, 2);
  // omega_2 = L_1 + L_2
  CHECK(to_orthogonal(*c2, Weight{0, 1}) == std::vector<Rational>{Rational(1), Rational(1)});
  auto d4 = build_root_system(RootType::D, 4);
  CHECK(to_orthogonal(*d4, Weight{0, 0, 0, 1}) ==
        std::vector<Rational>{Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)});
}

TEST_CASE("orthogonal basis errors") {
  auto f4 = build_root_system(RootType::F4, 4);
  CHECK_THROWS_AS(to_orthogonal(*f4, Weight{1, 0, 0, 0}), ValidationError);
  auto c2 = build_root_system(RootType::C, 2);
  CHECK_THROWS_AS(from_orthogonal(*c2, {Rational(1)}), ValidationError);
  auto d4 = build_root_system(RootType::D, 4);
  CHECK_THROWS_AS(from_orthogonal(*d4, {Rational(1, 2), Rational(0), Rational(0), Rational(0)}), ValidationError);
}

TEST_CASE("unsupported systems") {
  CHECK_THROWS_AS(build_root_system(RootType::A, 0), ValidationError);
  CHECK_THROWS_AS(build_root_system(RootType::D, 2), ValidationError);
  CHECK_THROWS_AS(build_root_system(RootType::F4, 3), ValidationError);
  CHECK_THROWS_AS(build_root_system(RootType::G2, 3), ValidationError);
  CHECK_THROWS_AS(build_root_system("B", 3), ValidationError);
  CHECK_THROWS_AS(build_root_system("E", 6), ValidationError);
  CHECK(parse_root_type("c") == RootType::C);
  CHECK(parse_root_type("f4") == RootType::F4);
}

TEST_CASE("node and rank checks") {
  auto a3 = build_root_system(RootType::A, 3);
  CHECK_THROWS_AS(a3->check_node(0), ValidationError);
  CHECK_THROWS_AS(a3->check_node(4), ValidationError);
  CHECK_THROWS_AS(a3->check_weight(Weight{1, 2}), ValidationError);
  CHECK_NOTHROW(a3->check_weight(Weight{1, 2, 3}));
}

TEST_CASE("reflection matches the test formula on every simple root") {
  auto sys = build_root_system(RootType::D, 5);
  for (const auto& b : sys->positive_roots())
    for (int i = 1; i <= 5; ++i) CHECK(sys->reflect(b.weight, i).coords() == oracle::reflect(sys->cartan_matrix(), b.weight.coords(), i));
}

TEST_CASE("weight parsing") {
  CHECK(parse_weight("1,-2, 3") == Weight{1, -2, 3});
  CHECK(parse_weight("0") == Weight{0});
  CHECK_THROWS_AS(parse_weight(""), ValidationError);
  CHECK_THROWS_AS(parse_weight("1,,2"), ValidationError);
  CHECK_THROWS_AS(parse_weight("1,a"), ValidationError);
  CHECK_THROWS_AS(parse_weight("1.5"), ValidationError);
  CHECK(omega_string(Weight{0, -2, 0, 1}) == "-2w2 + w4");
  CHECK(omega_string(Weight{0, 0}) == "0");
}
