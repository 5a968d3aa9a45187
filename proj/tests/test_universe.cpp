#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ug/universe.hpp"

using namespace ug;

namespace {

// Independent oracle: the number of multisets of transitive piece sizes with
// total at most max_size, counted by dynamic programming over piece kinds.
long long count_multisets(const std::vector<int>& piece_sizes, int max_size) {
    std::vector<long long> ways(max_size + 1, 0);
    ways[0] = 1;
    for (int sz : piece_sizes)
        for (int total = sz; total <= max_size; ++total) ways[total] += ways[total - sz];
    long long sum = 0;
    for (long long w : ways) sum += w;
    return sum;
}

std::vector<int> piece_sizes(const GroupPtr& g) {
    std::vector<int> out;
    for (const Subgroup& k : subgroup_conjugacy_reps(g))
        out.push_back(static_cast<int>(g->order) / k.order());
    return out;
}

} // namespace

TEST_CASE("object counts match the multiset oracle") {
    for (const char* name : {"trivial", "c2", "c3", "c4", "v4", "s3", "c6"}) {
        const GroupPtr g = builtin_group(name);
        for (int max_size = 0; max_size <= 4; ++max_size) {
            const Universe uni = build_universe(g, max_size);
            CHECK(static_cast<long long>(uni.objects.size()) ==
                  count_multisets(piece_sizes(g), max_size));
        }
    }
    // Known values: C2 at size 3 has 6 classes, S3 at size 3 has 7.
    CHECK(build_universe(builtin_group("c2"), 3).objects.size() == 6);
    CHECK(build_universe(builtin_group("s3"), 3).objects.size() == 7);
}

TEST_CASE("objects are pairwise non-isomorphic and within bounds") {
    for (const char* name : {"c4", "s3"}) {
        const Universe uni = build_universe(builtin_group(name), 4);
        for (size_t i = 0; i < uni.objects.size(); ++i) {
            CHECK(uni.objects[i].size <= 4);
            validate_gset(uni.objects[i]);
            for (size_t j = 0; j < i; ++j)
                if (uni.objects[i].size == uni.objects[j].size && uni.objects[i].size > 0)
                    CHECK_FALSE(gset_isomorphism(uni.objects[i], uni.objects[j]).has_value());
        }
    }
}

TEST_CASE("completeness against brute-forced tiny actions") {
    // Every valid C2-action on {0, 1} is isomorphic to some universe object.
    const GroupPtr c2 = builtin_group("c2");
    const Universe uni = build_universe(c2, 2);
    int found = 0, total = 0;
    for (int a0 = 0; a0 < 2; ++a0)
        for (int a1 = 0; a1 < 2; ++a1) {
            try {
                const GSet x = gset_from_table(c2, {{0, 1}, {a0, a1}});
                ++total;
                for (const GSet& o : uni.objects)
                    if (o.size == 2 && gset_isomorphism(x, o).has_value()) {
                        ++found;
                        break;
                    }
            } catch (const NotAGSet&) {
            }
        }
    CHECK(total == 2);  // trivial action and the swap
    CHECK(found == total);
}

TEST_CASE("map lists are complete") {
    const Universe uni = build_universe(builtin_group("s3"), 3);
    // Count maps per ordered pair and compare with all_gmaps directly.
    std::vector<std::vector<int>> got(uni.objects.size(), std::vector<int>(uni.objects.size(), 0));
    for (const UniverseMap& m : uni.maps) {
        ++got[m.src][m.tgt];
        // Each entry really is a map between the named representatives.
        CHECK(m.map.source.act_ == uni.objects[m.src].act_);
        CHECK(m.map.target.act_ == uni.objects[m.tgt].act_);
    }
    for (size_t i = 0; i < uni.objects.size(); ++i)
        for (size_t j = 0; j < uni.objects.size(); ++j)
            CHECK(got[i][j] == static_cast<int>(all_gmaps(uni.objects[i], uni.objects[j]).size()));
}

TEST_CASE("compositions name the pieces") {
    const Universe uni = build_universe(builtin_group("s3"), 3);
    for (size_t i = 0; i < uni.objects.size(); ++i) {
        int total = 0;
        for (int p : uni.compositions[i]) total += uni.transitive[p].size;
        CHECK(total == uni.objects[i].size);
    }
}
