#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "nevan/sequences.hpp"

namespace nevan::cli {

using Json = nlohmann::ordered_json;

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<Json>> rows;
};

struct Report {
    std::string command;
    Json summary = Json::object();
    std::vector<Table> tables;
    int exit_code = 0;
};

Json to_json(const Report& r);
void emit(const Report& r, const std::string& format, std::ostream& out);

// "name:key=value,key=value"
GeneratedConfig generate(const std::string& spec);

// "6..10" or "6,8,10"
std::vector<int> parse_levels(const std::string& s);

// Runs one command; args exclude the program name. Returns the exit code:
// 0 success, 2 negative verdict, 1 error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nevan::cli
