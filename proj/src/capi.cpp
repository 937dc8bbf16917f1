// Copyright 2026 the gcwave authors
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

#include "gcwave/gcwave.h"

#include <exception>
#include <new>
#include <string>

#include "driver_util.hpp"
#include "gcwave/config.hpp"
#include "gcwave/driver.hpp"

namespace {

thread_local std::string g_lastError;

gcw_status statusOf(const gcwave::Error& e) {
  switch (e.kind()) {
    case gcwave::ErrorKind::Verify:
      return GCW_VERIFY_FAIL;
    case gcwave::ErrorKind::Input:
      return GCW_INPUT_ERROR;
    case gcwave::ErrorKind::Runtime:
      return GCW_RUNTIME_ABORT;
  }
  return GCW_INTERNAL;
}

gcw_status fail(gcw_status s, const std::string& message) {
  g_lastError = message;
  return s;
}

// Runs `body` with the library's exception taxonomy folded into status
// codes.  `body` returns the status for the completed-but-failed case.
template <typename Fn>
gcw_status guarded(Fn&& body) {
  try {
    g_lastError.clear();
    return body();
  } catch (const gcwave::Error& e) {
    return fail(statusOf(e), e.what());
  } catch (const std::exception& e) {
    return fail(GCW_INTERNAL, e.what());
  } catch (...) {
    return fail(GCW_INTERNAL, "unknown failure");
  }
}

std::string dirOf(const char* out_dir) {
  return out_dir == nullptr ? std::string() : std::string(out_dir);
}

}  // namespace

struct gcw_config {
  gcwave::RunConfig value;
};

extern "C" {

gcw_config* gcw_config_create(void) {
  return new (std::nothrow) gcw_config();
}

gcw_status gcw_config_load(gcw_config* cfg, const char* path) {
  return guarded([&]() -> gcw_status {
    if (cfg == nullptr || path == nullptr) {
      return fail(GCW_INPUT_ERROR, "null argument to gcw_config_load");
    }
    cfg->value = gcwave::parseConfigFile(path);
    return GCW_OK;
  });
}

gcw_status gcw_config_set(gcw_config* cfg, const char* key,
                          const char* value) {
  return guarded([&]() -> gcw_status {
    if (cfg == nullptr || key == nullptr || value == nullptr) {
      return fail(GCW_INPUT_ERROR, "null argument to gcw_config_set");
    }
    gcwave::applyConfigOverride(cfg->value, key, value);
    return GCW_OK;
  });
}

void gcw_config_free(gcw_config* cfg) { delete cfg; }

gcw_status gcw_run(const gcw_config* cfg, const char* out_dir, int quiet) {
  return guarded([&]() -> gcw_status {
    if (cfg == nullptr) {
      return fail(GCW_INPUT_ERROR, "null config in gcw_run");
    }
    gcwave::validateConfig(cfg->value);
    gcwave::runSimulation(cfg->value, dirOf(out_dir), quiet != 0);
    return GCW_OK;
  });
}

gcw_status gcw_verify(const gcw_config* cfg, const char* out_dir,
                      int quiet) {
  return guarded([&]() -> gcw_status {
    if (cfg == nullptr) {
      return fail(GCW_INPUT_ERROR, "null config in gcw_verify");
    }
    gcwave::validateConfig(cfg->value);
    gcwave::VerifyOutcome out =
        gcwave::verifySuites(cfg->value, dirOf(out_dir), quiet != 0);
    if (!out.pass) {
      return fail(GCW_VERIFY_FAIL,
                  "verification failed; see " + out.reportPath);
    }
    return GCW_OK;
  });
}

gcw_status gcw_audit(const gcw_config* cfg, const char* trajectory_path,
                     const char* out_dir, int quiet) {
  return guarded([&]() -> gcw_status {
    if (cfg == nullptr) {
      return fail(GCW_INPUT_ERROR, "null config in gcw_audit");
    }
    gcwave::validateConfig(cfg->value);
    const std::string dir = dirOf(out_dir);
    const std::string traj =
        trajectory_path != nullptr
            ? std::string(trajectory_path)
            : gcwave::detail::resolvePath(dir, cfg->value.snapshotPath);
    gcwave::AuditOutcome out =
        gcwave::auditTrajectory(cfg->value, traj, dir, quiet != 0);
    if (!out.pass) {
      return fail(GCW_VERIFY_FAIL,
                  "audit failed; see " + out.summaryJsonPath);
    }
    return GCW_OK;
  });
}

const char* gcw_last_error(void) { return g_lastError.c_str(); }

}  // extern "C"
