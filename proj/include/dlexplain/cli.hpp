#ifndef DLEXPLAIN_CLI_HPP
#define DLEXPLAIN_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "dlexplain/learner.hpp"

namespace dlx {

nlohmann::json config_to_json(const SearchConfig& cfg);

// {config, solutions[], expansions_used, exhausted}
nlohmann::json learn_report_to_json(const SearchResult& result, const SearchConfig& cfg);

// Coverage counts, member lists, accuracy, length and score of one solution.
nlohmann::json solution_to_json(const Solution& solution);

namespace cli {

// Exit status: 0 success, 1 usage error, 2 data error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cli
}  // namespace dlx

#endif  // DLEXPLAIN_CLI_HPP
