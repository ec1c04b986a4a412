#include <map>
#include <sstream>
#include <vector>

#include "tropgal/error.hpp"
#include "tropgal/multigraph.hpp"

#include "lamandb_data.hpp"

namespace tropgal {

namespace {

// Lines of the bundled file: "<n> <henneberg sequence>", in index order.
const std::map<int, std::vector<HennebergSequence>>& database() {
    static const std::map<int, std::vector<HennebergSequence>> db = [] {
        std::map<int, std::vector<HennebergSequence>> out;
        std::istringstream in(detail::lamandb_text);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            std::size_t sep = line.find(' ');
            int n = std::stoi(line.substr(0, sep));
            out[n].push_back(parse_henneberg(line.substr(sep + 1)));
        }
        return out;
    }();
    return db;
}

const std::vector<HennebergSequence>& entries(int n) {
    auto it = database().find(n);
    if (it == database().end())
        fail(errc::not_found,
             "no bundled Laman graphs for n = " + std::to_string(n) + " (range is 3..8)");
    return it->second;
}

} // namespace

int laman_db_count(int n) { return static_cast<int>(entries(n).size()); }

SimpleGraph laman_db(int n, int index) {
    const auto& list = entries(n);
    if (index < 1 || index > static_cast<int>(list.size()))
        fail(errc::not_found, "index " + std::to_string(index) + " out of range 1.." +
                                  std::to_string(list.size()) + " for n = " + std::to_string(n));
    return from_henneberg_sequence(list[static_cast<std::size_t>(index) - 1]);
}

} // namespace tropgal
