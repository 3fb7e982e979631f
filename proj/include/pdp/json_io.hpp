/**
 * Canonical JSON schedule format, the contract between the library and
 * the CLI:
 *
 *   { "k": int, "v": int,
 *     "classes": [ [ { "members": [int...], "host": int }, ... ], ... ] }
 *
 * "host" is omitted for blocks that have no host assigned yet.
 */
#pragma once

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "pdp/core.hpp"

namespace pdp {

inline nlohmann::json schedule_to_json(const Schedule& s) {
    nlohmann::json classes = nlohmann::json::array();
    for (const ParallelClass& pc : s.classes) {
        nlohmann::json blocks = nlohmann::json::array();
        for (const Block& blk : pc.blocks) {
            nlohmann::json jb;
            jb["members"] = blk.members;
            if (blk.host) jb["host"] = *blk.host;
            blocks.push_back(std::move(jb));
        }
        classes.push_back(std::move(blocks));
    }
    return nlohmann::json{{"k", s.k}, {"v", s.v}, {"classes", std::move(classes)}};
}

inline Schedule schedule_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("k") || !j.contains("v") || !j.contains("classes"))
        throw std::runtime_error("schedule json: expected object with k, v, classes");
    Schedule s;
    s.k = j.at("k").get<int>();
    s.v = j.at("v").get<int>();
    const auto& classes = j.at("classes");
    if (!classes.is_array())
        throw std::runtime_error("schedule json: classes must be an array");
    int course = 0;
    for (const auto& jc : classes) {
        if (!jc.is_array())
            throw std::runtime_error("schedule json: each class must be an array of blocks");
        ParallelClass pc;
        pc.course_index = course++;
        for (const auto& jb : jc) {
            if (!jb.is_object() || !jb.contains("members"))
                throw std::runtime_error("schedule json: each block needs a members array");
            Block blk(jb.at("members").get<std::vector<Point>>());
            if (jb.contains("host")) blk.host = jb.at("host").get<Point>();
            pc.blocks.push_back(std::move(blk));
        }
        s.classes.push_back(std::move(pc));
    }
    return s;
}

inline Schedule load_schedule(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open schedule file: " + path);
    nlohmann::json j;
    in >> j;
    return schedule_from_json(j);
}

inline void save_schedule(const Schedule& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write schedule file: " + path);
    out << schedule_to_json(s).dump(1) << '\n';
}

}  // namespace pdp
