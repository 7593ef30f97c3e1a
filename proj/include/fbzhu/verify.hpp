#ifndef FBZHU_VERIFY_HPP
#define FBZHU_VERIFY_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "fbzhu/fockmod.hpp"

namespace fbz {

struct Budget {
    int ceiling = 64;     // generator top-weight ceiling for membership searches
    int param_max = 3;    // range of universally quantified small parameters
    unsigned seed = 12345;
    bool keep_certs = false;
};

enum class Status { Proven, Reproduced, Unknown, Failed };
std::string status_str(Status s);

struct EntryResult {
    std::string id, section, kind, anchor;
    Status status = Status::Proven;
    int cutoff = 0;
    double ms = 0;
    int checks = 0;
    std::string detail;  // carries the exact residual on Failed
    bool replay_ok = true;
    int max_a_degree = 0;
    std::vector<Certificate> certs;  // populated when Budget::keep_certs
};

struct RelationEntry {
    std::string id, section, kind, anchor;
};

std::vector<RelationEntry> registry_list();
std::map<std::string, int> registry_section_counts();
bool registry_has(const std::string& id);

EntryResult verify(const std::string& id, const Budget& b);

struct Report {
    std::vector<EntryResult> entries;
    int proven = 0, reproduced = 0, unknown = 0, failed = 0;
};
Report verify_all(const Budget& b, const std::string& section_filter = "", int jobs = 1);
std::string report_text(const Report& r);
std::string report_json(const Report& r);

}  // namespace fbz

#endif
