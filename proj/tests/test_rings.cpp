#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sc/rings.hpp"

#include <random>

using namespace sc;

TEST_CASE("hensel_sqrt examples") {
    // a = -1 mod 5^3, hint 2 -> 57
    Residue a(ZZ(-1), ZZ(125));
    Residue r = hensel_sqrt(a, ZZ(2));
    CHECK(r.value == 57);
    CHECK((r * r - a).is_zero());
    // identity case
    Residue one(ZZ(1), ZZ(343));
    CHECK(hensel_sqrt(one, ZZ(1)).value == 1);
    // a = -2 mod 3^2, hint 1 -> 4
    Residue b(ZZ(-2), ZZ(9));
    CHECK(hensel_sqrt(b, ZZ(1)).value == 4);
    // non-residue rejected
    CHECK_THROWS(hensel_sqrt(Residue(ZZ(2), ZZ(25)), ZZ(1)));
}

TEST_CASE("hensel_sqrt random property") {
    std::mt19937 rng(12345);
    const long primes[] = {5, 7, 11, 13, 101};
    for (int it = 0; it < 1000; ++it) {
        long p = primes[rng() % 5];
        long s = 1 + rng() % 4;
        ZZ m = pow_zz(ZZ(p), s);
        ZZ x = ZZ(static_cast<unsigned long>(rng())) % m;
        if (x % p == 0) x += 1;
        Residue a(x * x, m);
        Residue r = hensel_sqrt(a, x % p);
        CHECK((r * r - a).is_zero());
    }
}

TEST_CASE("cornacchia examples") {
    auto r = cornacchia(ZZ(13), 1);
    REQUIRE(r.has_value());
    CHECK(((r->u == 3 && r->v == 2) || (r->u == 2 && r->v == 3)));
    CHECK(r->u * r->u + r->D * r->v * r->v == 13);

    auto r2 = cornacchia(ZZ(29), 5);
    REQUIRE(r2.has_value());
    CHECK(r2->u == 3);
    CHECK(r2->v == 2);

    auto r3 = cornacchia(ZZ(3), 5, 2);
    REQUIRE(r3.has_value());
    CHECK(r3->u == 1);
    CHECK(r3->v == 1);

    CHECK(!cornacchia(ZZ(7), 1).has_value());  // 7 not a sum of two squares
}

TEST_CASE("cornacchia identity always exact") {
    for (long p : primes_in(3, 200)) {
        for (long D : {1, 2, 3, 5}) {
            for (long e : {1, 2, 4}) {
                auto r = cornacchia(ZZ(p), D, e);
                if (r) CHECK(r->u * r->u + D * r->v * r->v == e * p);
            }
        }
    }
}

TEST_CASE("select_unit_embedding") {
    // p=5, D=1, (u,v)=(1,2): the embedding must make 1 + 2 sqrt(-1) a unit
    QuadraticRep rep{ZZ(1), ZZ(2), 1, 1, ZZ(5)};
    auto emb = select_unit_embedding(rep, ZZ(5), 1);
    Residue w = Residue(ZZ(1), ZZ(5)) + Residue(ZZ(emb.v_sign * 2), ZZ(5)) * emb.root;
    CHECK(w.value % 5 != 0);
    // root 3 gives 1+2*3=7 = 2 (unit); root 2 gives 5 = 0
    CHECK(((emb.root.value == 3 && emb.v_sign == 1) || (emb.root.value == 2 && emb.v_sign == -1)));

    QuadraticRep rep13{ZZ(3), ZZ(2), 1, 1, ZZ(13)};
    auto emb13 = select_unit_embedding(rep13, ZZ(13), 1);
    Residue w13 = Residue(ZZ(3), ZZ(13)) + Residue(ZZ(emb13.v_sign * 2), ZZ(13)) * emb13.root;
    CHECK(w13.value == 6);  // 3 + 2*8 = 19 = 6 mod 13

    // v = 0: trivially a unit
    QuadraticRep rep0{ZZ(1), ZZ(0), 1, 1, ZZ(5)};
    CHECK_NOTHROW(select_unit_embedding(rep0, ZZ(5), 2));
}

TEST_CASE("unit product identity") {
    // (u + v sqrt(-D))(u - v sqrt(-D)) = e p mod p^s under any embedding
    for (long p : primes_in(5, 60)) {
        for (long D : {1, 2, 5}) {
            if (kronecker(ZZ(-D), ZZ(p)) != 1) continue;
            auto rep = cornacchia(ZZ(p), D);
            if (!rep) continue;
            auto emb = select_unit_embedding(*rep, ZZ(p), 3);
            ZZ m = pow_zz(ZZ(p), 3);
            Residue u(rep->u, m), v(ZZ(emb.v_sign) * rep->v, m);
            Residue prod = (u + v * emb.root) * (u - v * emb.root);
            CHECK((prod - Residue(ZZ(p), m)).is_zero());
            CHECK((u + v * emb.root).value % p != 0);
        }
    }
}

TEST_CASE("kronecker") {
    CHECK(kronecker(ZZ(-4), ZZ(5)) == 1);
    CHECK(kronecker(ZZ(-3), ZZ(7)) == 1);
    CHECK(kronecker(ZZ(-4), ZZ(2)) == 0);
    // complete multiplicativity spot checks
    for (long a : {-7L, -3L, 2L, 5L, 9L})
        for (long b : {3L, 5L, 11L})
            CHECK(kronecker(ZZ(a * b), ZZ(35)) == kronecker(ZZ(a), ZZ(35)) * kronecker(ZZ(b), ZZ(35)));
}

TEST_CASE("cyclotomic ring axioms") {
    std::mt19937 rng(7);
    long p = 7;
    auto rand_el = [&]() {
        std::vector<ZZ> c(p - 1);
        for (auto& x : c) x = static_cast<long>(rng() % 19) - 9;
        return CyclotomicInt(p, c);
    };
    for (int it = 0; it < 200; ++it) {
        auto a = rand_el(), b = rand_el(), c = rand_el();
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
    }
    // zeta^p = 1 and 1 + zeta + ... + zeta^{p-1} = 0
    auto z = CyclotomicInt::zeta_pow(p, 1);
    CyclotomicInt acc = CyclotomicInt::integer(p, ZZ(1));
    for (long k = 1; k < p; ++k) acc += CyclotomicInt::zeta_pow(p, k);
    CHECK(acc.is_zero());
    CyclotomicInt zp = CyclotomicInt::integer(p, ZZ(1));
    for (long k = 0; k < p; ++k) zp = zp * z;
    ZZ val;
    CHECK(zp.rational_part(&val));
    CHECK(val == 1);
}

TEST_CASE("residue ring axioms mod p^s") {
    std::mt19937 rng(99);
    ZZ m = pow_zz(ZZ(11), 3);
    auto rand_r = [&]() { return Residue(ZZ(static_cast<unsigned long>(rng())), m); };
    for (int it = 0; it < 500; ++it) {
        auto a = rand_r(), b = rand_r(), c = rand_r();
        CHECK(((a + b) * c == a * c + b * c));
        CHECK((a * b == b * a));
        CHECK(((a - a).is_zero()));
    }
    // units iff not divisible by p
    CHECK_THROWS(inv(Residue(ZZ(11), m)));
    Residue u(ZZ(13), m);
    CHECK((u * inv(u) == Residue(ZZ(1), m)));
}

TEST_CASE("quadratic extension arithmetic") {
    ZZ m = pow_zz(ZZ(7), 2);
    QuadExt a(Residue(ZZ(3), m), Residue(ZZ(4), m), ZZ(2));
    QuadExt b(Residue(ZZ(1), m), Residue(ZZ(-1), m), ZZ(2));
    QuadExt ab = a * b;
    // (3+4s)(1-s) = 3 - 3s + 4s - 4*2 = -5 + s
    CHECK(ab.a.value == ((ZZ(-5) % m) + m) % m);
    CHECK(ab.b.value == 1);
}
