#pragma once

// Machine-readable records emitted by the command-line tool. JSON documents carry
// {"kind", "schema_version", "payload"}; CSV tables carry a mandatory header row,
// ',' delimiters, '.' decimals and LF line endings, numbers at 17 significant digits.

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "zolotarev/oracle.hpp"
#include "zolotarev/sextic.hpp"
#include "zolotarev/verify.hpp"
#include "zolotarev/zfp.hpp"

namespace zolotarev::io {

inline constexpr const char* kSchemaVersion = "1.0";

enum class RecordKind { construction, solution, verification, table, oracle };

NLOHMANN_JSON_SERIALIZE_ENUM(RecordKind, {{RecordKind::construction, "construction"},
                                          {RecordKind::solution, "solution"},
                                          {RecordKind::verification, "verification"},
                                          {RecordKind::table, "table"},
                                          {RecordKind::oracle, "oracle"}})

struct OutputRecord {
  RecordKind kind;
  nlohmann::json payload;
  std::string schema_version = kSchemaVersion;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

struct TableRow {
  double t, s, L, L_inf, alpha, beta, gamma;
};

/// One row per t on an inclusive uniform sweep, ascending.
std::vector<TableRow> sweep(double t_min, double t_max, int steps);

OutputRecord construction_record(const ZolotarevSextic<double>& zs);
OutputRecord solution_record(const ZfpSolution& sol);
OutputRecord verification_record(const verify::VerificationReport& report);
OutputRecord table_record(const std::vector<TableRow>& rows);
OutputRecord oracle_record(double s, const oracle::MinimaxResult& result, double closed_form_L);

std::string emit_json(const OutputRecord& record);
OutputRecord parse_json(std::string_view text);

/// CSV rendering for construction, solution and table records; throws std::invalid_argument otherwise.
std::string emit_csv(const OutputRecord& record);

/// printf("%.17g") with a '.' decimal point regardless of locale.
std::string format_number(double v);

}  // namespace zolotarev::io
