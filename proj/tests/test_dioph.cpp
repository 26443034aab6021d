#include <doctest.h>

#include <algorithm>
#include <set>

#include "dioph.hpp"
#include "oracle.hpp"

using namespace ecq;

namespace {

std::vector<std::array<long, 4>> as_longs4(const std::vector<IntTuple>& v) {
    std::vector<std::array<long, 4>> out;
    for (const auto& t : v) {
        REQUIRE(t.size() == 4);
        out.push_back({t[0].get_si(), t[1].get_si(), t[2].get_si(), t[3].get_si()});
    }
    return out;
}

IntTuple tup(std::initializer_list<long> xs) {
    IntTuple t;
    for (long x : xs) t.emplace_back(x);
    return t;
}

}  // namespace

TEST_CASE("catalan: only (+-3, 2, 2, 3), equal to the naive scan") {
    const SolutionSet s = catalan_search(1000);
    CHECK(s.solutions == std::vector<IntTuple>{tup({-3, 2, 2, 3}), tup({3, 2, 2, 3})});
    CHECK(as_longs4(s.solutions) == oracle::catalan_naive(1000));
    CHECK(catalan_search(100).solutions == s.solutions);
    CHECK(catalan_search(2000).solutions == s.solutions);
    CHECK(catalan_search(2).solutions.empty());
    for (const auto& t : s.solutions) CHECK(pow(t[0], t[1].get_ui()) - pow(t[2], t[3].get_ui()) == 1);
}

TEST_CASE("lemma22: no perfect powers at all among 16 p^m + 1") {
    CHECK(lemma22_search(1000, 20).solutions.empty());
    CHECK(lemma22_search(3, 2).solutions.empty());
    CHECK(lemma22_search(2000, 20).solutions.empty());
    // oracle: any perfect power, dropping the prime-power and prime-exponent conditions
    for (std::uint64_t q = 2; q <= 1000; ++q) {
        if (!oracle::is_prime_u64(q)) continue;
        for (long sign : {1L, -1L}) {
            oracle::Z pm = sign * static_cast<long>(q);
            for (unsigned m = 2; m <= 20; ++m) {
                pm *= sign * static_cast<long>(q);
                const oracle::Z v = 16 * pm + 1;
                CHECK_FALSE(mpz_perfect_power_p(v.get_mpz_t()));
            }
        }
    }
    // the m = 1 probe that the exponent condition rules out
    CHECK(16 * 3 + 1 == 49);
}

TEST_CASE("lemma23: sporadic solution plus the family, equal to the naive scan") {
    const SolutionSet s = lemma23_search(12, 10000);
    CHECK(as_longs4(s.solutions) == oracle::square_plus_power_naive(12, 10000));
    std::vector<IntTuple> expected = {tup({7, 3, 5, 4})};
    for (unsigned h = 3; h <= 12; ++h) {
        const Int a = pow(Int(2), h - 2);
        expected.push_back({a - 1, a + 1, Int(h), Int(2)});
    }
    std::sort(expected.begin(), expected.end());
    CHECK(s.solutions == expected);
    CHECK(s.solutions.size() == 11);
    REQUIRE(s.families.size() == 1);
    CHECK(s.families[0].tuple[0] == "2^(h-2)-1");
    for (const auto& t : s.solutions) CHECK(t[0] * t[0] + pow(Int(2), t[2].get_ui()) == pow(t[1], t[3].get_ui()));
}

TEST_CASE("lemma23: larger bounds add only family members") {
    const SolutionSet s = lemma23_search(20, 1000000);
    for (const auto& t : s.solutions) {
        const bool family = t[3] == 2 && t[1] - t[0] == 2 && t[0] + 1 == pow(Int(2), t[2].get_ui() - 2);
        if (!family) CHECK(t == tup({7, 3, 5, 4}));
    }
    CHECK(s.solutions.size() == 19);
}

TEST_CASE("lemma24: five shapes, nothing flagged, equal to the naive scan") {
    const SolutionSet s = lemma24_search(100, 5);
    std::vector<IntTuple> all = s.solutions;
    all.insert(all.end(), s.flagged.begin(), s.flagged.end());
    std::sort(all.begin(), all.end());
    CHECK(as_longs4(all) == oracle::norm125_naive(100, 5));
    std::vector<IntTuple> expected;
    for (long x : {-15L, 15L}) expected.push_back(tup({x, 5, 2, 1}));
    for (long x : {-63L, 63L}) expected.push_back(tup({x, 31, 2, 1}));
    for (long x : {-5L, 5L}) expected.push_back(tup({x, 5, 2, -1}));
    for (long x : {-25L, 25L}) expected.push_back(tup({x, 5, 3, 1}));
    for (long x : {-11L, 11L})
        for (long l = 2; l <= 5; ++l) expected.push_back(tup({x, 1, l, -1}));
    std::sort(expected.begin(), expected.end());
    CHECK(s.solutions == expected);
    CHECK(s.flagged.empty());
    for (const auto& t : all) CHECK(t[0] * t[0] - 125 == t[3] * 4 * pow(t[1], t[2].get_ui()));
}

TEST_CASE("lemma24: doubling the bound keeps the sporadic set") {
    auto sporadic = [](const SolutionSet& s) {
        std::vector<IntTuple> v;
        for (const auto& t : s.solutions)
            if (t[1] != 1) v.push_back(t);
        return v;
    };
    CHECK(sporadic(lemma24_search(100, 5)) == sporadic(lemma24_search(200, 10)));
    CHECK(sporadic(lemma24_search(100, 5)) == sporadic(lemma24_search(10000, 12)));
}

TEST_CASE("cor25: seven shapes and the documented rejections") {
    const SolutionSet s = cor25_filter(100, 5);
    std::vector<IntTuple> expected = {tup({13, 5, 2, 1}), tup({-2, 5, 2, 1}), tup({37, 31, 2, 1}),
                                      tup({8, 5, 2, -1}), tup({3, 5, 2, -1}), tup({-7, 5, 3, 1})};
    for (long l = 2; l <= 5; ++l) expected.push_back(tup({11, 1, l, -1}));
    std::sort(expected.begin(), expected.end());
    CHECK(s.solutions == expected);
    CHECK(s.flagged.empty());
    for (const auto& t : s.solutions) {
        CHECK(t[0] * t[0] - 11 * t[0] - 1 == t[3] * pow(t[1], t[2].get_ui()));
        CHECK(prime_power(t[0]).has_value());
    }
    auto rejected_as = [&](const IntTuple& t) -> std::string {
        for (const auto& r : s.rejected)
            if (r.tuple == t) return r.reason;
        return "";
    };
    CHECK(rejected_as(tup({-26, 31, 2, 1})) == "not a prime power");
    CHECK(rejected_as(tup({18, 5, 3, 1})) == "not a prime power");
    CHECK(rejected_as(tup({0, 1, 2, -1})) == "s is zero");
    CHECK(cor25_filter(200, 10).solutions.size() == expected.size() + 5);
}

TEST_CASE("cor25 tuples reproduce the order-5 sporadic discriminants") {
    std::set<std::string> discs;
    for (const auto& t : cor25_filter(100, 5).solutions) {
        if (t[1] == 1) continue;
        const Int s = t[0];
        // closed form for N = 5 at t = 1: s^5 (s^2 - 11 s - 1)
        const Factorization f = factor(pow(s, 5) * (s * s - 11 * s - 1));
        discs.insert(f.abs().to_string());
    }
    const std::set<std::string> expected = {"2^5*5^2", "2^15*5^2", "3^5*5^2", "5^2*13^5", "31^2*37^5", "5^3*7^5"};
    CHECK(discs == expected);
}

TEST_CASE("pell125 against exhaustive search") {
    const auto minus = pell_125(-4, 5);
    const auto plus = pell_125(4, 5);
    const std::vector<std::pair<Int, Int>> minus_expected = {
        {11, 1}, {1364, 122}, {167761, 15005}, {Int("20633239"), Int("1845493")}, {Int("2537720636"), Int("226980634")}};
    CHECK(minus == minus_expected);
    CHECK(plus.front() == std::pair<Int, Int>{123, 11});

    for (int c : {-4, 4}) {
        const auto gen = pell_125(c, 5);
        const auto scan = oracle::pell_scan(c, 100000);
        std::size_t below = 0;
        for (const auto& [x, y] : gen)
            if (y <= 100000) ++below;
        REQUIRE(scan.size() == below);
        for (std::size_t i = 0; i < below; ++i) {
            CHECK(gen[i].first == Int(std::to_string(scan[i].first)));
            CHECK(gen[i].second == Int(std::to_string(scan[i].second)));
        }
    }
}

TEST_CASE("pell125 recurrence over the first ten unit powers") {
    const auto a = pell_125(-4, 10), b = pell_125(4, 10);
    std::vector<std::pair<Int, Int>> merged;
    for (int i = 0; i < 10; ++i) {
        merged.push_back(a[i]);
        merged.push_back(b[i]);
    }
    for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
        const auto& [x, y] = merged[i];
        const auto& [nx, ny] = merged[i + 1];
        // multiply (x + y r)/2 by (11 + r)/2 with r^2 = 125
        CHECK(2 * nx == 11 * x + 125 * y);
        CHECK(2 * ny == x + 11 * y);
        CHECK(nx * nx - 125 * ny * ny == (i % 2 == 0 ? 4 : -4));
    }
    CHECK_THROWS_AS(pell_125(3, 1), Error);
    CHECK_THROWS_AS(pell_125(4, 0), Error);
}

TEST_CASE("mordell") {
    const SolutionSet s = mordell_search(Int(2000), 10000);
    CHECK(s.solutions == std::vector<IntTuple>{{Int(-100), Int(20)}, {Int(-44), Int(-4)}, {Int(44), Int(-4)},
                                               {Int(100), Int(20)}});
    std::vector<std::pair<long, long>> got;
    for (const auto& t : s.solutions) got.emplace_back(t[0].get_si(), t[1].get_si());
    std::sort(got.begin(), got.end());
    CHECK(got == oracle::mordell_naive(2000, 10000));
    CHECK(mordell_search(Int(2000), 20000).solutions == s.solutions);
    CHECK(mordell_search(Int(2000), 3).solutions.empty());
    const SolutionSet one = mordell_search(Int(1), 1000);
    std::vector<std::pair<long, long>> got1;
    for (const auto& t : one.solutions) got1.emplace_back(t[0].get_si(), t[1].get_si());
    std::sort(got1.begin(), got1.end());
    CHECK(got1 == oracle::mordell_naive(1, 1000));
    for (auto want : {std::pair<long, long>{1, 0}, {-1, 0}, {0, -1}, {3, 2}, {-3, 2}})
        CHECK(std::find(got1.begin(), got1.end(), want) != got1.end());
}

TEST_CASE("equation ids") {
    CHECK(equation_ids().size() == 7);
    CHECK(equation_ids().front() == "catalan");
}
