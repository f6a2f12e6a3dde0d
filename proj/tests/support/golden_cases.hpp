#pragma once

// Commands whose reports are pinned under tests/golden. Arguments starting
// with "@" name files in tests/data.

#include <string>
#include <vector>

namespace golden {

struct Case {
  std::string name;
  std::vector<std::string> args;
  int exit_code = 0;
  std::string stdin_text;
};

inline const std::vector<Case>& cases() {
  static const std::vector<Case> all = {
      {"validate_ex244", {"validate", "@ex244.json"}},
      {"validate_ex244_json", {"--format", "json", "validate", "@ex244.json"}},
      {"validate_chain", {"validate", "@chain.json"}},
      {"validate_overlap", {"validate", "@overlapping_squares.json"}, 1},
      {"sections_p1xp1", {"sections", "@p1xp1.json", "--degree", "1", "--root-datum", "A1"}},
      {"sections_p1xp1_json", {"sections", "@p1xp1.json", "--degree", "1", "--format", "json"}},
      {"sections_chain", {"sections", "@chain.json", "--degree", "2", "--root-datum", "A1"}},
      {"cohomology_ex244", {"cohomology", "@ex244.json"}},
      {"cohomology_ex244_json", {"--format", "json", "cohomology", "@ex244.json"}},
      {"cohomology_ex244_toric", {"cohomology", "@ex244.json", "--mode", "toric"}},
      {"cohomology_h1_triangle", {"cohomology", "@h1_triangle.json"}},
      {"cohomology_missing_aut", {"cohomology", "@h1_triangle.json", "--mode", "supplied"}, 1},
      {"degenerate_square", {"degenerate", "@square.json", "--heights", "@square_heights.json"}},
      {"degenerate_half", {"degenerate", "@segment.json", "--heights", "@segment_half_heights.json"}, 1},
      {"degenerate_half_auto",
       {"degenerate", "@segment.json", "--heights", "@segment_half_heights.json", "--base-change", "auto"}},
      {"degenerate_triangle", {"degenerate", "@triangle.json", "--heights", "@h1_triangle_heights.json"}},
      {"degenerate_many_cells", {"degenerate", "@h1_triangle.json", "--heights", "@h1_triangle_heights.json"}, 1},
      {"matroid_weightset", {"matroid", "weightset", "--r", "2", "--ranks", "1,1,1,1"}},
      {"matroid_subdivisions", {"matroid", "subdivisions", "--r", "2", "--ranks", "1,1,1,1"}},
      {"matroid_subdivisions_json", {"--format", "json", "matroid", "subdivisions", "--r", "2", "--ranks", "2,1,1"}},
      {"matroid_thincell", {"matroid", "thincell", "--r", "2", "--ranks", "1,1,1,1", "--d", "{\"01\": 1}"}},
      {"matroid_thincell_invalid", {"matroid", "thincell", "--r", "1", "--ranks", "1,1", "--d", "{\"0\": 1, \"1\": 1}"}, 1},
      {"moment_a2", {"moment", "--root-datum", "A2", "--weight", "1,0", "--admissible"}},
      {"moment_a1", {"moment", "--root-datum", "A1", "--weight", "3", "--format", "json"}},
      {"moment_not_dominant", {"moment", "--root-datum", "A2", "--weight", "1,-1"}, 1},
      {"snf", {"snf"}, 0, "2 4\n6 8\n"},
      {"snf_json", {"--format", "json", "snf"}, 0, "[[1,2,3],[4,5,6]]"},
      {"catalog_fe", {"catalog", "--kind", "Fe", "--e", "2", "--n-minus", "1", "--n-plus", "3"}},
      {"catalog_p2", {"catalog", "--kind", "P2", "--n", "2"}},
      {"catalog_bad_params", {"catalog", "--kind", "Se", "--e", "3", "--n", "4"}, 2},
      {"usage_no_command", {}, 2},
      {"usage_unknown_option", {"validate", "@ex244.json", "--frobnicate"}, 2},
      {"usage_bad_format", {"--format", "xml", "validate", "@ex244.json"}, 2},
      {"parse_malformed", {"validate", "@malformed.json"}, 2},
      {"parse_float_vertex", {"validate", "@float_vertex.json"}, 2},
      {"missing_file", {"validate", "@does_not_exist.json"}, 2},
  };
  return all;
}

/// Replaces "@name" by data_dir/name.
inline std::vector<std::string> resolve(const std::vector<std::string>& args, const std::string& data_dir) {
  std::vector<std::string> out;
  for (const auto& a : args) out.push_back(!a.empty() && a[0] == '@' ? data_dir + "/" + a.substr(1) : a);
  return out;
}

}  // namespace golden
