// Copyright 2026 The AEE Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>

#include "aee/errors.hpp"
#include "aee/sim/config.hpp"
#include "aee/sim/profile.hpp"
#include "aee/sim/simulator.hpp"

namespace aee::sim {

void PrintTo(Scenario s, std::ostream* os) { *os << scenario_name(s); }

namespace {

SimConfig small(Scenario s, std::uint64_t seed) {
  SimConfig c;
  c.scenario = s;
  c.vehicle_count = 3;
  c.duration_ms = 2000;
  c.event_slot_ms = 1000;
  c.cam_interval_ms = 500;
  c.rng_seed = seed;
  return c;
}

TEST(SimConfigTest, ParsesKeysAndComments) {
  const SimConfig c = SimConfig::parse(
      "# comment\n"
      "scenario = cam   # trailing\n"
      "vehicles=20\n"
      "duration = 60\n"
      "cam_interval = 0.1\n"
      "event_slot = 600\n"
      "seed = 99\n"
      "attacker_credentials = 1\n"
      "attacker_identities = 4\n"
      "drop_probability = 0.25\n"
      "location = elm-and-main\n"
      "profile = raspberrypi3\n");
  EXPECT_EQ(c.scenario, Scenario::kCam);
  EXPECT_EQ(c.vehicle_count, 20u);
  EXPECT_EQ(c.duration_ms, 60000);
  EXPECT_EQ(c.cam_interval_ms, 100);
  EXPECT_EQ(c.event_slot_ms, 600000);
  EXPECT_EQ(c.rng_seed, 99u);
  EXPECT_EQ(c.attacker.credentials, 1u);
  EXPECT_EQ(c.attacker.identities, 4u);
  EXPECT_DOUBLE_EQ(c.drop_probability, 0.25);
  EXPECT_EQ(c.location, "elm-and-main");
  EXPECT_EQ(c.profile, "raspberrypi3");
}

TEST(SimConfigTest, TextRoundTrip) {
  SimConfig c = small(Scenario::kCam, 5);
  c.drop_probability = 0.1;
  c.presence = 0.75;
  const SimConfig back = SimConfig::parse(c.to_text());
  EXPECT_EQ(back.to_text(), c.to_text());
}

TEST(SimConfigTest, Errors) {
  auto fails = [](const std::string& text, const std::string& needle) {
    try {
      (void)SimConfig::parse(text);
    } catch (const ConfigError& e) {
      return std::string(e.what()).find(needle) != std::string::npos;
    }
    return false;
  };
  EXPECT_TRUE(fails("vehicles = 2\nspeed = 3\n", "line 2"));
  EXPECT_TRUE(fails("vehicles = two\n", "vehicles"));
  EXPECT_TRUE(fails("cam_interval = 0.05\n", "cam_interval"));
  EXPECT_TRUE(fails("cam_interval = 2\n", "cam_interval"));
  EXPECT_TRUE(fails("event_slot = 0.5\n", "event_slot"));
  EXPECT_TRUE(fails("drop_probability = 1\n", "drop_probability"));
  EXPECT_TRUE(fails("presence = 0\n", "presence"));
  EXPECT_TRUE(fails("location = a||b\n", "location"));
  EXPECT_TRUE(fails("start_time = 20171399\n", "start"));
  EXPECT_TRUE(fails("profile = pdp11\n", "profile"));
  EXPECT_TRUE(fails("duration = 0.0005\n", "duration"));
  EXPECT_TRUE(fails("scenario = highway\n", "scenario"));
  EXPECT_TRUE(fails("vehicles\n", "key = value"));
}

TEST(SimConfigTest, ShippedConfigsLoad) {
  std::size_t n = 0;
  for (const auto& entry : std::filesystem::directory_iterator(AEE_CONFIGS_DIR)) {
    if (entry.path().extension() != ".conf") continue;
    EXPECT_NO_THROW(SimConfig::load_file(entry.path())) << entry.path();
    ++n;
  }
  EXPECT_GE(n, 4u);
}

TEST(EventScheduleTest, TimeslotLabels) {
  SimConfig c;
  c.scenario = Scenario::kCam;
  c.duration_ms = 86'400'000;
  const EventSchedule s = EventSchedule::for_config(c);
  EXPECT_EQ(s.mode(), EventSchedule::Mode::kTimeslot);
  EXPECT_EQ(s.slot_count(), 144u);
  EXPECT_EQ(s.event(0).text(), "201703011000");
  EXPECT_EQ(s.event(1).text(), "201703011010");
  EXPECT_EQ(s.event(84).text(), "201703020000");
  EXPECT_EQ(s.slot_at(599'999), 0u);
  EXPECT_EQ(s.slot_at(600'000), 1u);
}

TEST(EventScheduleTest, SubMinuteSlotsCarrySeconds) {
  SimConfig c;
  c.scenario = Scenario::kCam;
  c.event_slot_ms = 10'000;
  c.duration_ms = 30'000;
  const EventSchedule s = EventSchedule::for_config(c);
  EXPECT_EQ(s.event(0).text(), "20170301100000");
  EXPECT_EQ(s.event(2).text(), "20170301100020");
}

TEST(EventScheduleTest, RsuLabels) {
  SimConfig c;
  c.location = "junction-7";
  c.event_slot_ms = 60'000;
  c.duration_ms = 120'000;
  const EventSchedule s = EventSchedule::for_config(c);
  EXPECT_EQ(s.mode(), EventSchedule::Mode::kRsuGenerated);
  EXPECT_EQ(s.event(0).text(), "junction-7||20170301100000");
  EXPECT_EQ(s.event(1).text(), "junction-7||20170301100100");
}

TEST(ProfileTest, ReferenceCosts) {
  const CostProfile z = zenbook_profile();
  OpCounts gver;
  gver.mul_g1 = 6;
  gver.exp_g1 = 11;
  gver.mul_gt = 1;
  gver.pairings = 2;
  EXPECT_NEAR(z.cost_ms(gver), 6 * 0.003 + 11 * 0.92 + 0.005 + 2 * 6.19, 1e-9);
  EXPECT_EQ(z.cost_ticks(OpCounts{}), 1);
  EXPECT_EQ(profile_by_name("raspberrypi3").exp_g1, 5.65);
  EXPECT_THROW(profile_by_name("vax"), ConfigError);
}

class SimScenarioTest : public ::testing::TestWithParam<Scenario> {};

TEST_P(SimScenarioTest, DeterministicReport) {
  SimConfig c = small(GetParam(), 17);
  c.attacker = {1, 3};
  const SimReport a = run(c).report;
  const SimReport b = run(c).report;
  EXPECT_EQ(a.to_text(), b.to_text());
  EXPECT_EQ(a.to_csv(), b.to_csv());
  c.rng_seed = 18;
  EXPECT_NE(run(c).report.transcript_sha256, a.transcript_sha256);
}

TEST_P(SimScenarioTest, SybilAttackerFlaggedHonestNot) {
  SimConfig c = small(GetParam(), 21);
  c.attacker = {1, 3};
  const SimReport r = run(c).report;
  EXPECT_EQ(r.attacker_events, 2u);
  EXPECT_EQ(r.attacker_events_detected, 2u);
  EXPECT_EQ(r.honest_flagged, 0u);
  ASSERT_FALSE(r.detections.empty());
  for (const SybilDetection& d : r.detections) {
    EXPECT_TRUE(d.sender_is_attacker);
    EXPECT_EQ(d.claimed_identities, 3u);
    EXPECT_GE(d.linked_signatures, 3u);
  }
}

TEST_P(SimScenarioTest, OneTokenPerVehiclePerEvent) {
  const SimReport r = run(small(GetParam(), 22)).report;
  EXPECT_EQ(r.max_group_signatures_per_vehicle_event, 1u);
  EXPECT_EQ(r.one_token_violations, 0u);
  EXPECT_EQ(r.cross_event_token_collisions, 0u);
  EXPECT_EQ(r.hot_path_ops.pairings, 0u);
  EXPECT_EQ(r.honest_flagged, 0u);
  EXPECT_GT(r.event_messages_sent, 0u);
}

TEST_P(SimScenarioTest, NoCrossEventTokenCollisions) {
  SimConfig c = small(GetParam(), 23);
  c.duration_ms = 4000;
  const SimReport r = run(c).report;
  EXPECT_EQ(r.slots, 4u);
  EXPECT_EQ(r.cross_event_token_collisions, 0u);
  EXPECT_EQ(r.distinct_tokens, 4u * 3u);
}

INSTANTIATE_TEST_SUITE_P(Scenarios, SimScenarioTest,
                         ::testing::Values(Scenario::kIntersection, Scenario::kCam),
                         [](const auto& info) { return std::string(scenario_name(info.param)); });

TEST(IntersectionTest, TenVehiclesTwoSlots) {
  SimConfig c;
  c.vehicle_count = 10;
  c.event_slot_ms = 5000;
  c.duration_ms = 10000;
  c.cam_interval_ms = 1000;
  c.rng_seed = 4;
  const SimReport r = run_intersection(c).report;
  EXPECT_EQ(r.group_signatures_sent, 20u);
  EXPECT_EQ(r.max_group_signatures_per_vehicle_event, 1u);
  EXPECT_EQ(r.rsu_signature_failures, 0u);
  EXPECT_EQ(r.verification.at("GVer").rejected, 0u);
}

TEST(CamTest, DayOfSlotsPrecomputedUpFront) {
  SimConfig c;
  c.scenario = Scenario::kCam;
  c.vehicle_count = 1;
  c.duration_ms = 2000;
  c.cam_interval_ms = 1000;
  c.precompute_horizon_ms = 86'400'000;
  const SimReport r = run_cam(c).report;
  EXPECT_EQ(r.precomputed_signatures, 144u);
}

TEST(CamTest, TwelveThousandCams) {
  SimConfig c;
  c.scenario = Scenario::kCam;
  c.vehicle_count = 20;
  c.duration_ms = 60'000;
  c.cam_interval_ms = 100;
  c.rng_seed = 3;
  const SimReport r = run_cam(c).report;
  EXPECT_EQ(r.event_messages_sent, 12000u);
  EXPECT_EQ(r.verification.at("EVer").count, 12000u * 19u);
  EXPECT_EQ(r.verification.at("EVer").rejected, 0u);
  EXPECT_EQ(r.unverifiable_without_epk, 0u);
  EXPECT_EQ(r.hot_path_ops.pairings, 0u);
}

TEST(CamTest, LossyChannelStillVerifies) {
  SimConfig c = small(Scenario::kCam, 31);
  c.vehicle_count = 4;
  c.cam_interval_ms = 100;
  c.drop_probability = 0.2;
  c.rebroadcast_every = 3;
  const SimReport r = run_cam(c).report;
  EXPECT_GT(r.dropped, 0u);
  EXPECT_GT(r.group_signature_rebroadcasts, 0u);
  EXPECT_EQ(r.verification.at("EVer").rejected, 0u);
}

TEST(PrecomputeReportTest, SingleSlot) {
  const PrecomputeReport r = offline_precompute_report(1, 1, 5);
  EXPECT_EQ(r.slots, 1u);
  EXPECT_EQ(r.valid, 1u);
  EXPECT_DOUBLE_EQ(r.reference_laptop_s, 1.83);
  EXPECT_DOUBLE_EQ(r.reference_rpi3_s, 22.8);
}

}  // namespace
}  // namespace aee::sim
