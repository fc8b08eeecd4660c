#pragma once

#include "vortex/cli/config.hpp"
#include "vortex/cli/csv.hpp"

namespace vortex::cli {

/// Transverse map of S at z = 0, t = 0: x, y, S_rho, S_phi, S_z.
CsvArtifact run_fields(const RunConfig &config);

/// |M(b)| for every m_f of one level: b_over_lambda, m_f, abs_M.
CsvArtifact run_amplitude_scan(const RunConfig &config);

/// One row per level: n_f, l_f, f_twisted, r_twisted.
CsvArtifact run_ratios(const RunConfig &config);

/// A_Lambda(b): b_over_lambda, A_lambda (empty where undefined).
CsvArtifact run_asymmetry(const RunConfig &config);

/// Spin / orbital / total projection table.
CsvArtifact run_angmom(const RunConfig &config);

CsvArtifact run(const RunConfig &config);

} // namespace vortex::cli
