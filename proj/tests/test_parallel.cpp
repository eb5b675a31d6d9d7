#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <stdexcept>
#include <utility>

#include "testutil.hpp"
#include "wavelcs/errors.hpp"
#include "wavelcs/io.hpp"
#include "wavelcs/parallel.hpp"
#include "wavelcs/serial.hpp"

using namespace wavelcs;

TEST_CASE("partition_blocks covers ragged grids") {
    const BlockGrid grid = partition_blocks(10, 5, 4);
    CHECK(grid.block_rows() == 3);
    CHECK(grid.block_cols() == 2);
    const CellRect last = grid.cells({2, 1});
    CHECK(last.i_last - last.i_first + 1 == 2);  // remainder height
    CHECK(last.j_last - last.j_first + 1 == 1);  // remainder width
    CHECK(last.i_last == 10);
    CHECK(last.j_last == 5);
}

TEST_CASE("partition_blocks degenerates to one block when B covers everything") {
    const BlockGrid grid = partition_blocks(8, 8, 8);
    CHECK(grid.block_count() == 1);
    const CellRect all = grid.cells({0, 0});
    CHECK(all.i_first == 1);
    CHECK(all.i_last == 8);
    CHECK(all.j_first == 1);
    CHECK(all.j_last == 8);
}

TEST_CASE("partition_blocks of an empty side is empty; B=0 is rejected") {
    CHECK(partition_blocks(0, 5, 4).empty());
    CHECK(partition_blocks(5, 0, 4).empty());
    CHECK_THROWS_AS(partition_blocks(4, 4, 0), ConfigError);
}

TEST_CASE("every cell belongs to exactly one block") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 20; ++round) {
        const std::size_t m = 1 + rng() % 40;
        const std::size_t n = 1 + rng() % 40;
        const std::size_t block = 1 + rng() % 12;
        const BlockGrid grid = partition_blocks(m, n, block);
        std::vector<int> covered(m * n, 0);
        for (std::size_t r = 0; r < grid.block_rows(); ++r) {
            for (std::size_t c = 0; c < grid.block_cols(); ++c) {
                const CellRect rect = grid.cells({r, c});
                for (std::size_t i = rect.i_first; i <= rect.i_last; ++i) {
                    for (std::size_t j = rect.j_first; j <= rect.j_last; ++j) {
                        covered[(i - 1) * n + (j - 1)] += 1;
                    }
                }
            }
        }
        for (const int count : covered) {
            CHECK(count == 1);
        }
    }
}

TEST_CASE("wavefront_schedule enumerates anti-diagonals in order") {
    const WaveSchedule schedule = wavefront_schedule(partition_blocks(12, 8, 4));  // 3 x 2 blocks
    REQUIRE(schedule.waves.size() == 4);
    CHECK(schedule.waves[0] == std::vector<BlockCoord>{{0, 0}});
    CHECK(schedule.waves[1] == std::vector<BlockCoord>{{1, 0}, {0, 1}});
    CHECK(schedule.waves[2] == std::vector<BlockCoord>{{2, 0}, {1, 1}});
    CHECK(schedule.waves[3] == std::vector<BlockCoord>{{2, 1}});
}

TEST_CASE("wavefront_schedule of a single block is one wave") {
    const WaveSchedule schedule = wavefront_schedule(partition_blocks(8, 8, 8));
    REQUIRE(schedule.waves.size() == 1);
    CHECK(schedule.waves[0] == std::vector<BlockCoord>{{0, 0}});
}

TEST_CASE("wavefront_schedule of a 4x4 grid peaks at width 4") {
    const WaveSchedule schedule = wavefront_schedule(partition_blocks(16, 16, 4));
    REQUIRE(schedule.waves.size() == 7);
    std::size_t peak = 0;
    for (const auto& wave : schedule.waves) {
        peak = std::max(peak, wave.size());
    }
    CHECK(peak == 4);
    CHECK(schedule.block_count() == 16);
}

TEST_CASE("schedule places every block strictly after its dependencies") {
    std::mt19937_64 rng(17);
    for (int round = 0; round < 10; ++round) {
        const BlockGrid grid = partition_blocks(1 + rng() % 50, 1 + rng() % 50, 1 + rng() % 9);
        const WaveSchedule schedule = wavefront_schedule(grid);
        CHECK(schedule.block_count() == grid.block_count());
        std::map<std::pair<std::size_t, std::size_t>, std::size_t> wave_of;
        for (std::size_t d = 0; d < schedule.waves.size(); ++d) {
            for (const BlockCoord block : schedule.waves[d]) {
                wave_of[{block.row, block.col}] = d;
            }
        }
        for (const auto& [coords, wave] : wave_of) {
            const auto [r, c] = coords;
            if (r > 0) {
                CHECK(wave_of.at({r - 1, c}) < wave);
            }
            if (c > 0) {
                CHECK(wave_of.at({r, c - 1}) < wave);
            }
        }
    }
}

TEST_CASE("compute_block fills a whole-grid block like the serial fill") {
    const Sequence x("ATGC");
    const Sequence y("ATGC");
    const BlockGrid grid = partition_blocks(4, 4, 8);
    DpTable dp(4, 4);
    BacktrackTable back(4, 4);
    compute_block(grid, {0, 0}, x, y, dp, back);
    CHECK(dp.at(4, 4) == 4);
    CHECK(dp == lcs_fill_serial(x, y).dp);
}

TEST_CASE("a block with no matching symbols only propagates the border maximum") {
    const Sequence x("AAAA");
    const Sequence y("GGGG");
    const BlockGrid grid = partition_blocks(4, 4, 4);
    DpTable dp(4, 4);
    BacktrackTable back(4, 4);
    compute_block(grid, {0, 0}, x, y, dp, back);
    for (std::size_t i = 1; i <= 4; ++i) {
        for (std::size_t j = 1; j <= 4; ++j) {
            CHECK(dp.at(i, j) == 0);
            CHECK(back.at(i, j) != Arrow::Diag);
        }
    }
}

TEST_CASE("interior blocks computed in dependency order equal the serial cells") {
    const Sequence x("ABCBDAB");
    const Sequence y("BDCABA");
    const FillResult reference = lcs_fill_serial(x, y);
    const BlockGrid grid = partition_blocks(7, 6, 2);
    DpTable dp(7, 6);
    BacktrackTable back(7, 6);
    for (const auto& wave : wavefront_schedule(grid).waves) {
        for (const BlockCoord block : wave) {
            compute_block(grid, block, x, y, dp, back);
        }
    }
    CHECK(dp == reference.dp);
    CHECK(back == reference.back);
}

TEST_CASE("compute_block rejects coordinates outside the grid") {
    const BlockGrid grid = partition_blocks(4, 4, 2);
    DpTable dp(4, 4);
    BacktrackTable back(4, 4);
    const Sequence x("ATGC");
    CHECK_THROWS_AS(compute_block(grid, {2, 0}, x, x, dp, back), std::out_of_range);
}

TEST_CASE("degenerate parallelism equals the serial fill") {
    ParallelConfig config;
    config.workers = 1;
    config.block_size = 1;
    const TimedFill fill = lcs_fill_parallel(Sequence("ATGC"), Sequence("ATGC"), config);
    CHECK(fill.dp.at(4, 4) == 4);
    CHECK(fill.dp == lcs_fill_serial(Sequence("ATGC"), Sequence("ATGC")).dp);
    CHECK(fill.elapsed_seconds >= 0.0);
}

TEST_CASE("four workers with tiny blocks reproduce the serial tables") {
    const Sequence x("ABCBDAB");
    const Sequence y("BDCABA");
    ParallelConfig config;
    config.workers = 4;
    config.block_size = 2;
    const TimedFill fill = lcs_fill_parallel(x, y, config);
    const FillResult reference = lcs_fill_serial(x, y);
    CHECK(fill.dp.at(7, 6) == 4);
    CHECK(fill.dp == reference.dp);
    CHECK(fill.back == reference.back);
}

TEST_CASE("a lopsided 5000x200 fill keeps the serial length") {
    const Sequence alphabet("ACGT");
    const Sequence x = generate_random(5000, alphabet, 320);
    const Sequence y = generate_random(200, alphabet, 321);
    ParallelConfig config;
    config.workers = 4;
    const TimedFill fill = lcs_fill_parallel(x, y, config);
    CHECK(fill.dp.final_length() == lcs_length(x, y));
}

TEST_CASE("parallel output is independent of workers and block size") {
    std::mt19937_64 rng(40);
    for (int round = 0; round < 5; ++round) {
        const Sequence x = testutil::random_sequence(rng, rng() % 300);
        const Sequence y = testutil::random_sequence(rng, rng() % 300);
        const FillResult reference = lcs_fill_serial(x, y);
        const Sequence reference_lcs = traceback(reference.back, x, x.size(), y.size());
        for (const unsigned workers : {1u, 2u, 3u, 8u}) {
            for (const std::size_t block : {std::size_t{1}, std::size_t{7}, std::size_t{64}}) {
                ParallelConfig config;
                config.workers = workers;
                config.block_size = block;
                const TimedFill fill = lcs_fill_parallel(x, y, config);
                CAPTURE(workers);
                CAPTURE(block);
                CHECK(fill.dp == reference.dp);
                CHECK(fill.back == reference.back);
                CHECK(traceback(fill.back, x, x.size(), y.size()) == reference_lcs);
            }
        }
    }
}

TEST_CASE("parallel fill validates its configuration") {
    ParallelConfig config;
    config.workers = 0;
    CHECK_THROWS_AS(lcs_fill_parallel(Sequence("A"), Sequence("A"), config), ConfigError);
    config.workers = 2;
    config.block_size = 0;
    CHECK_THROWS_AS(lcs_fill_parallel(Sequence("A"), Sequence("A"), config), ConfigError);
    config.block_size = 4;
    config.memory_budget = 16;
    CHECK_THROWS_AS(lcs_fill_parallel(Sequence("ATGC"), Sequence("ATGC"), config), CapacityError);
}

TEST_CASE("empty inputs produce empty work and zero length") {
    const TimedFill fill = lcs_fill_parallel(Sequence(""), Sequence("ATGC"));
    CHECK(fill.dp.final_length() == 0);
    CHECK(fill.back.rows() == 0);
    const TimedFill both = lcs_fill_parallel(Sequence(""), Sequence(""));
    CHECK(both.dp.final_length() == 0);
}
