#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "ccs/group.hpp"
#include "test_helpers.hpp"

using namespace ccs;

TEST_CASE("cyclic groups") {
    Group z1 = make_cyclic(1);
    CHECK(z1.order == 1);
    CHECK(z1.identity == 0);

    Group z4 = make_cyclic(4);
    CHECK(z4.op(1, 3) == 0);
    CHECK(z4.op(2, 3) == 1);

    Group z6 = make_cyclic(6);
    CHECK(z6.inverse(2) == 4);
    CHECK(z6.inverse(0) == 0);

    CHECK_THROWS_AS(make_cyclic(0), std::invalid_argument);
}

TEST_CASE("symmetric groups") {
    CHECK(make_symmetric(1).order == 1);
    CHECK(make_symmetric(3).order == 6);
    CHECK(make_symmetric(5).order == 120);
    CHECK_THROWS_AS(make_symmetric(6), std::invalid_argument);
    CHECK_THROWS_AS(make_symmetric(0), std::invalid_argument);

    // lexicographic one-line numbering: identity first
    Group s3 = make_symmetric(3);
    CHECK(s3.identity == 0);
    CHECK(s3.name_of(0) == "012");
    CHECK(s3.name_of(5) == "210");
}

TEST_CASE("dihedral groups") {
    Group d4 = make_dihedral(4);
    CHECK(d4.order == 8);
    bool abelian = true;
    for (int a = 0; a < d4.order && abelian; ++a)
        for (int b = 0; b < d4.order && abelian; ++b) abelian = d4.op(a, b) == d4.op(b, a);
    CHECK_FALSE(abelian);
    CHECK_THROWS_AS(make_dihedral(1), std::invalid_argument);
    // D2 is the Klein four group
    CHECK(make_dihedral(2).order == 4);
    CHECK(conjugacy_classes(make_dihedral(2)).classes.size() == 4);
}

TEST_CASE("quaternion group") {
    Group q8 = make_quaternion8();
    CHECK(q8.order == 8);
    // i*j = k, j*i = -k
    CHECK(q8.op(2, 4) == 6);
    CHECK(q8.op(4, 2) == 7);
    // i*i = -1
    CHECK(q8.op(2, 2) == 1);
    CHECK(conjugacy_classes(q8).classes.size() == 5);
}

TEST_CASE("direct products") {
    Group z2xz3 = direct_product(make_cyclic(2), make_cyclic(3));
    CHECK(z2xz3.order == 6);
    // isomorphic to Z6: abelian, so 6 conjugacy classes
    CHECK(conjugacy_classes(z2xz3).classes.size() == 6);
}

TEST_CASE("all constructors validate") {
    for (const auto& [name, g] : testing::default_suite()) {
        INFO(name);
        CHECK(validate_group(g).empty());
    }
}

TEST_CASE("cayley table parsing") {
    SECTION("trivial group") {
        Group g = from_cayley_table("1\n0\n");
        CHECK(g.order == 1);
        CHECK(g.identity == 0);
    }
    SECTION("identity need not be index 0") {
        // Z2 with the identity at index 1
        Group g = from_cayley_table("2\n1 0\n0 1\n");
        CHECK(g.identity == 1);
        CHECK(g.op(0, 0) == 1);
        CHECK(validate_group(g).empty());
    }
    SECTION("comments and blank lines") {
        Group g = from_cayley_table("# a comment\n\n2\n0 1\n# more\n1 0\n");
        CHECK(g.order == 2);
        CHECK(g.identity == 0);
    }
    SECTION("non-associative loop reports a failing triple") {
        // order-5 loop: identity 0, two-sided inverses, not associative
        std::string text =
            "5\n"
            "0 1 2 3 4\n"
            "1 0 3 4 2\n"
            "2 4 0 1 3\n"
            "3 2 4 0 1\n"
            "4 3 1 2 0\n";
        CHECK_THROWS_WITH(from_cayley_table(text),
                          Catch::Matchers::ContainsSubstring("associativity"));
    }
    SECTION("latin square without identity") {
        // 3x3 latin square with no identity row
        CHECK_THROWS_WITH(from_cayley_table("3\n1 0 2\n0 2 1\n2 1 0\n"),
                          Catch::Matchers::ContainsSubstring("identity"));
    }
    SECTION("no identity") {
        // constant rows: no left identity
        CHECK_THROWS_AS(from_cayley_table("2\n1 1\n0 0\n"), validation_error);
    }
    SECTION("malformed input") {
        CHECK_THROWS_AS(from_cayley_table(""), parse_error);
        CHECK_THROWS_AS(from_cayley_table("2\n0 1\n"), parse_error);       // missing row
        CHECK_THROWS_AS(from_cayley_table("2\n0 1 1\n1 0\n"), parse_error);  // long row
        CHECK_THROWS_AS(from_cayley_table("2\n0 7\n1 0\n"), parse_error);  // out of range
        CHECK_THROWS_AS(from_cayley_table("300\n"), parse_error);          // over the cap
    }
    SECTION("order cap is configurable") {
        CHECK_THROWS_AS(from_cayley_table("2\n0 1\n1 0\n", 1), parse_error);
    }
}

TEST_CASE("validate_group catches broken tables") {
    Group g = make_cyclic(3);
    g.mul[4] = 0;  // break a row
    CHECK_FALSE(validate_group(g).empty());

    Group h = make_cyclic(3);
    h.inv[1] = 1;
    auto violations = validate_group(h);
    REQUIRE_FALSE(violations.empty());
    CHECK(violations.front().find("inverse") != std::string::npos);
}

TEST_CASE("conjugation") {
    Group s3 = make_symmetric(3);
    for (int h = 0; h < s3.order; ++h) CHECK(conjugate(s3, s3.identity, h) == h);

    Group z6 = make_cyclic(6);
    for (int k = 0; k < 6; ++k)
        for (int h = 0; h < 6; ++h) CHECK(conjugate(z6, k, h) == h);

    // conjugating a transposition by a 3-cycle gives a different transposition
    auto data = conjugacy_classes(s3);
    int transposition = -1, three_cycle = -1;
    for (int a = 1; a < 6; ++a) {
        int cls = data.class_of[a];
        if (data.classes[cls].size() == 3 && transposition < 0) transposition = a;
        if (data.classes[cls].size() == 2 && three_cycle < 0) three_cycle = a;
    }
    REQUIRE(transposition >= 0);
    REQUIRE(three_cycle >= 0);
    int conj = conjugate(s3, three_cycle, transposition);
    CHECK(conj != transposition);
    CHECK(data.class_of[conj] == data.class_of[transposition]);
}

TEST_CASE("conjugacy classes") {
    for (int n = 1; n <= 6; ++n) {
        auto data = conjugacy_classes(make_cyclic(n));
        CHECK(data.classes.size() == static_cast<std::size_t>(n));
        for (const auto& cls : data.classes) CHECK(cls.size() == 1);
    }

    auto s3 = conjugacy_classes(make_symmetric(3));
    REQUIRE(s3.classes.size() == 3);
    std::multiset<std::size_t> sizes;
    for (const auto& cls : s3.classes) sizes.insert(cls.size());
    CHECK(sizes == std::multiset<std::size_t>{1, 2, 3});

    CHECK(conjugacy_classes(make_quaternion8()).classes.size() == 5);
    CHECK(conjugacy_classes(make_dihedral(4)).classes.size() == 5);
}

TEST_CASE("classes agree with pairwise conjugacy brute force") {
    for (const auto& [name, g] : testing::default_suite()) {
        INFO(name);
        auto data = conjugacy_classes(g);
        for (int a = 0; a < g.order; ++a)
            for (int b = 0; b < g.order; ++b) {
                bool related = false;
                for (int k = 0; k < g.order && !related; ++k) related = a == conjugate(g, k, b);
                CHECK(related == (data.class_of[a] == data.class_of[b]));
            }
    }
}

TEST_CASE("commuting fraction") {
    CHECK(commuting_fraction(make_cyclic(5)) == Rational(1));
    CHECK(commuting_fraction(make_symmetric(3)) == Rational(1, 2));
    CHECK(commuting_fraction(make_quaternion8()) == Rational(5, 8));
}

TEST_CASE("Burnside consistency across the suite") {
    for (const auto& [name, g] : testing::default_suite()) {
        INFO(name);
        Rational lhs = commuting_fraction(g) * g.order;
        CHECK(lhs == Rational(static_cast<long long>(conjugacy_classes(g).classes.size())));
    }
}

TEST_CASE("inverse is an involution") {
    for (const auto& [name, g] : testing::default_suite()) {
        INFO(name);
        for (int a = 0; a < g.order; ++a) CHECK(g.inverse(g.inverse(a)) == a);
    }
}
