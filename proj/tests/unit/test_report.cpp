#include <gtest/gtest.h>

#include <atomic>
#include <cmath>
#include <limits>
#include <cstdlib>
#include <stdexcept>

#include "srlw/parallel.hpp"
#include "srlw/report.hpp"

using namespace srlw;

TEST(Report, CsvFormatting) {
  ExperimentReport r("demo", {"a", "b", "c"});
  r.set_config_line("demo x=1");
  r.add_row({0.1, 3LL, std::string("ok")});
  r.add_row({1.0 / 3.0, -2LL, std::string("VIOLATION")});
  EXPECT_EQ(r.to_csv(), "# demo x=1\na,b,c\n0.10000000000000001,3,ok\n0.33333333333333331,-2,VIOLATION\n");
  EXPECT_THROW(r.add_row({1.0}), std::invalid_argument);
  EXPECT_EQ(r.number(1, "b"), -2.0);
  EXPECT_THROW(r.at(0, "zzz"), std::invalid_argument);
}

TEST(Report, NonFiniteValues) {
  EXPECT_EQ(format_double(std::nan("")), "nan");
  EXPECT_EQ(format_double(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(format_double(-std::numeric_limits<double>::infinity()), "-inf");
}

TEST(Report, Flags) {
  ExperimentReport r("x", {"a"});
  r.set_flag("VIOLATION");
  r.set_flag("VIOLATION");
  EXPECT_TRUE(r.has_flag("VIOLATION"));
  EXPECT_EQ(r.flags().size(), 1u);
}

TEST(Parallel, CoversEveryIndexOnce) {
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i]++; });
  for (auto& h : hits) EXPECT_EQ(h.load(), 1);
}

TEST(Parallel, PropagatesExceptions) {
  EXPECT_THROW(parallel_for(10, 3, [](std::size_t i) { if (i == 7) throw std::runtime_error("x"); }),
               std::runtime_error);
}

TEST(Parallel, EnvironmentCap) {
  ::setenv("SRLW_WORKERS", "3", 1);
  EXPECT_EQ(default_workers(), 3u);
  ::unsetenv("SRLW_WORKERS");
  EXPECT_GE(default_workers(), 1u);
}
