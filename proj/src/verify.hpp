#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace poc {

struct VerifyOptions {
    int d = 3;            // ambient dimension where a check needs one
    int s_size = 1;       // designated part size for the witness check (1 or 2)
    int n_es = 3;         // chain/antichain size parameter
    int t_extract = 3;    // first retained axis for the extraction check
    int parts = 6;        // parts for the forbidden-configuration check
    int part_points = 5;  // points per part for the forbidden-configuration check
};

struct VerifyReport {
    std::string check;
    int trials = 0;
    int passes = 0;
    int failures = 0;
    std::string first_failure;  // empty when everything passed
    std::uint64_t seed = 0;
};

const std::vector<std::string> &verify_check_names();

// Runs one named property check over seeded random instances. Each trial
// draws its own generator state from (seed, trial index), so reports are
// reproducible. Property violations are counted, never thrown.
VerifyReport run_verify(const std::string &check, int trials, std::uint64_t seed,
                        const VerifyOptions &opts = {});

}  // namespace poc
